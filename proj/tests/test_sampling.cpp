#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "diffspec/sampling.hpp"

using namespace diffspec;

namespace {

double mean_of(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

TEST_CASE("sampling is deterministic in the config") {
    SampleConfig config;
    config.laws.cycle = {Law::gaussian(), Law::gamma(1.5)};
    config.dimension = 4;
    config.sample_count = 5000;
    config.seed = 42;
    config.chunk_size = 128;
    const auto a = sample_matrix(config);
    const auto b = sample_matrix(config);
    CHECK(a == b);  // bit-identical
    config.seed = 43;
    CHECK(sample_matrix(config) != a);
}

TEST_CASE("law cycle assigns coordinates modulo the cycle length") {
    SampleConfig config;
    config.laws.cycle = {Law::gaussian(), Law::beta_law(2, 2)};
    config.dimension = 2;
    config.sample_count = 4000;
    config.seed = 7;
    const auto m = sample_matrix(config);
    for (std::int64_t r = 0; r < config.sample_count; ++r) {
        const double b = m[static_cast<std::size_t>(2 * r + 1)];
        CHECK(b >= 0.0);
        CHECK(b <= 1.0);
    }
}

TEST_CASE("gamma sample mean matches its law") {
    SampleConfig config;
    config.laws.cycle = {Law::gamma(1.0)};
    config.dimension = 1;
    config.sample_count = 1'000'000;
    config.seed = 2024;
    const auto m = sample_matrix(config);
    // exponential: mean 1, sd 1, so three standard errors is 3e-3
    CHECK(std::fabs(mean_of(m) - 1.0) <= 3e-3);
}

TEST_CASE("beta sample mean matches its law") {
    SampleConfig config;
    config.laws.cycle = {Law::beta_law(0.5, 0.5)};
    config.dimension = 1;
    config.sample_count = 1'000'000;
    config.seed = 99;
    const auto m = sample_matrix(config);
    // variance 1/8: three standard errors is about 1.1e-3
    CHECK(std::fabs(mean_of(m) - 0.5) <= 1.1e-3);
}

TEST_CASE("centered gamma is centered") {
    SampleConfig config;
    config.laws.cycle = {Law::centered_gamma(2.5)};
    config.dimension = 1;
    config.sample_count = 400'000;
    config.seed = 5;
    const auto m = sample_matrix(config);
    CHECK(std::fabs(mean_of(m)) <= 4.0 * std::sqrt(2.5 / 400'000.0));
}

TEST_CASE("non-integer gamma shapes, including below one") {
    for (double shape : {0.3, 0.5, 1.7}) {
        SampleConfig config;
        config.laws.cycle = {Law::gamma(shape)};
        config.dimension = 1;
        config.sample_count = 400'000;
        config.seed = 11;
        const auto m = sample_matrix(config);
        for (double v : m) CHECK(v > 0.0);
        CHECK(std::fabs(mean_of(m) - shape) <= 4.0 * std::sqrt(shape / 400'000.0));
    }
}

TEST_CASE("normal moments") {
    RandomStream stream(31337);
    double s2 = 0, s4 = 0;
    const int n = 400'000;
    for (int i = 0; i < n; ++i) {
        const double x = stream.normal();
        s2 += x * x;
        s4 += x * x * x * x;
    }
    CHECK(s2 / n == doctest::Approx(1.0).epsilon(0.01));
    CHECK(s4 / n == doctest::Approx(3.0).epsilon(0.03));
}

TEST_CASE("chunk seeds separate and reproduce") {
    CHECK(chunk_seed(1, 0) != chunk_seed(1, 1));
    CHECK(chunk_seed(1, 0) != chunk_seed(2, 0));
    CHECK(chunk_seed(123, 45) == chunk_seed(123, 45));
}

TEST_CASE("config validation") {
    SampleConfig config;
    config.laws.cycle = {};
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.laws.cycle = {Law::gaussian()};
    config.dimension = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    CHECK_THROWS_AS(Law::gamma(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Law::beta_law(1.0, -1.0), std::invalid_argument);
}
