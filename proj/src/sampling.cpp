#include "diffspec/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace diffspec {

Law Law::gamma(double nu) {
    if (!(nu > 0.0)) throw std::invalid_argument("Law: Gamma requires nu > 0");
    return {LawKind::Gamma, nu, 0.0, 0.0};
}

Law Law::centered_gamma(double nu) {
    if (!(nu > 0.0)) throw std::invalid_argument("Law: centered Gamma requires nu > 0");
    return {LawKind::CenteredGamma, nu, 0.0, 0.0};
}

Law Law::beta_law(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0)) throw std::invalid_argument("Law: Beta requires alpha, beta > 0");
    return {LawKind::Beta, 0.0, alpha, beta};
}

std::string Law::describe() const {
    switch (kind) {
        case LawKind::Gaussian: return "gaussian";
        case LawKind::Gamma: return "gamma(" + std::to_string(nu) + ")";
        case LawKind::CenteredGamma: return "centered-gamma(" + std::to_string(nu) + ")";
        case LawKind::Beta: return "beta(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
    }
    return "?";
}

double RandomStream::uniform() {
    // 53 high bits of the raw engine output, mapped to [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    have_spare_ = true;
    return u * factor;
}

double RandomStream::gamma(double shape) {
    if (!(shape > 0.0)) throw std::invalid_argument("RandomStream: gamma shape must be > 0");
    if (shape < 1.0) {
        // boost to shape+1 and scale back by U^{1/shape}
        const double g = gamma(shape + 1.0);
        double u;
        do {
            u = uniform();
        } while (u == 0.0);
        return g * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;  // squeeze acceptance
        if (u > 0.0 && std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double RandomStream::beta(double a, double b) {
    const double g1 = gamma(a);
    const double g2 = gamma(b);
    return g1 / (g1 + g2);
}

double RandomStream::draw(const Law& law) {
    switch (law.kind) {
        case LawKind::Gaussian: return normal();
        case LawKind::Gamma: return gamma(law.nu);
        case LawKind::CenteredGamma: return gamma(law.nu) - law.nu;
        case LawKind::Beta: return beta(law.alpha, law.beta);
    }
    throw std::logic_error("RandomStream: bad law");
}

std::uint64_t chunk_seed(std::uint64_t base, std::uint64_t chunk_index) {
    // splitmix64 finalizer over base advanced by the chunk index
    std::uint64_t z = base + (chunk_index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

void SampleConfig::validate() const {
    if (laws.cycle.empty()) throw std::invalid_argument("SampleConfig: empty law cycle");
    if (dimension < 1) throw std::invalid_argument("SampleConfig: dimension must be positive");
    if (sample_count < 0) throw std::invalid_argument("SampleConfig: negative sample count");
    if (chunk_size < 1) throw std::invalid_argument("SampleConfig: chunk size must be positive");
}

std::vector<double> sample_matrix(const SampleConfig& config) {
    config.validate();
    std::vector<double> out(static_cast<std::size_t>(config.sample_count) * static_cast<std::size_t>(config.dimension));
    const std::int64_t chunks = (config.sample_count + config.chunk_size - 1) / config.chunk_size;
    for (std::int64_t c = 0; c < chunks; ++c) {
        RandomStream stream(chunk_seed(config.seed, static_cast<std::uint64_t>(c)));
        const std::int64_t begin = c * config.chunk_size;
        const std::int64_t end = std::min(begin + config.chunk_size, config.sample_count);
        for (std::int64_t row = begin; row < end; ++row)
            for (int j = 0; j < config.dimension; ++j)
                out[static_cast<std::size_t>(row) * static_cast<std::size_t>(config.dimension) + static_cast<std::size_t>(j)] =
                    stream.draw(config.laws.law(j));
    }
    return out;
}

}  // namespace diffspec
