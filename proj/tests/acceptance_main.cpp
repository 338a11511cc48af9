// Acceptance harness: every criterion prints one PASS/FAIL line; the exit
// code is the number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "diffspec/errors.hpp"
#include "diffspec/monte_carlo.hpp"
#include "diffspec/verification.hpp"

using namespace diffspec;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void check_suite(Outcome& out, const CheckResult& result) {
    out.require(result.passed(), result.name + " failed " + std::to_string(result.failures) + "/" +
                                     std::to_string(result.cases) + " (" + result.counterexample + ")");
}

// 1. exact identity suite: the square-gamma identity, integration by parts,
//    the quadratic moment identity and the spectral sandwich, on >= 100
//    random eigenfunctions (or pairs/expansions) per structure, in under 10 s
Outcome criterion_identities() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    VerifyOptions options;  // identity_cases = 100, pair_cases = 100
    check_suite(out, check_square_gamma_identity(options));
    check_suite(out, check_integration_by_parts(options));
    check_suite(out, check_quadratic_statistic_identity(options));
    check_suite(out, check_spectral_sandwich(options));
    const double elapsed = seconds_since(start);
    out.require(elapsed < 10.0, "identity suite took " + std::to_string(elapsed) + " s (budget 10 s)");
    return out;
}

// 2. worked bound chain for X = H2 on the OU line, with the distance and the
//    fourth moment recomputed through the independent decomposition route
Outcome criterion_worked_bounds() {
    Outcome out;
    const ProductStructure ou({CoordinateStructure::ornstein_uhlenbeck()});
    const MultiPoly h2 = hermite_polynomial(2);
    const CriterionResult r = fourth_moment_bound(ou, h2, TargetLaw::gaussian());
    out.require(r.distance == Rational(36), "distance != 36");
    out.require(r.bound == Rational(68), "bound != 68");
    out.require(r.improved_bound && *r.improved_bound == Rational(48), "improved bound != 48");
    out.require(r.improved_distance && *r.improved_distance == Rational(32), "improved distance != 32");

    // independent route: Parseval over the spectral decomposition
    const MultiPoly expr = gamma_expression(ou, h2, TargetLaw::gaussian());
    Rational parseval = 0;
    for (const auto& [eta, comp] : decompose(ou, expr).components) parseval += integrate(ou, comp * comp);
    out.require(parseval == Rational(36), "Parseval distance != 36");

    Rational m4_via_square = 0;
    for (const auto& [eta, comp] : decompose(ou, h2 * h2).components) m4_via_square += integrate(ou, comp * comp);
    out.require(m4_via_square == Rational(60), "Parseval fourth moment != 60");
    out.require(moment(ou, h2, 4) == Rational(60), "direct fourth moment != 60");
    return out;
}

// 3. the moment statistic vanishes exactly at exact target moments across a
//    grid of rational parameters
Outcome criterion_target_vanishing() {
    Outcome out;
    VerifyOptions options;
    check_suite(out, check_target_vanishing(options));
    return out;
}

// 4. chaos structure: random eigenfunctions are chaotic, the Jacobi support
//    bound holds, and the Jacobi spectral condition is equivalent to
//    alpha + beta <= 1 across the parameter grid
Outcome criterion_chaos_structure() {
    Outcome out;
    VerifyOptions options;
    check_suite(out, check_eigenfunctions_chaotic(options));
    check_suite(out, check_jacobi_support_bound(options));
    check_suite(out, check_jacobi_condition_boundary(options));
    return out;
}

// 5. the explicit operator-product projection equals the basis-expansion
//    projection on random cases
Outcome criterion_projection_oracle() {
    Outcome out;
    VerifyOptions options;
    check_suite(out, check_projection_operator_oracle(options));
    return out;
}

// 6. Monte Carlo dichotomy at n = 2000, N = 1e5, fixed seed, under 60 s
Outcome criterion_monte_carlo() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();

    ExperimentScenario scenario;
    scenario.laws.cycle = {Law::gaussian()};
    scenario.family = HomogeneousSumSpec::paired_product();
    scenario.n_grid = {2000};
    scenario.sample_count = 100'000;
    scenario.seed = 20240917;
    scenario.target = TargetLaw::gaussian();

    const ExperimentRow positive = run_experiment(scenario).rows.front();
    out.require(std::fabs(positive.m4.value - 3.0) <= 0.1,
                "positive case m4 = " + std::to_string(positive.m4.value));
    out.require(positive.ks <= 0.02, "positive case ks = " + std::to_string(positive.ks));

    ExperimentScenario negative = scenario;
    negative.family = HomogeneousSumSpec::single_term({0, 1});
    const ExperimentRow neg = run_experiment(negative).rows.front();
    out.require(neg.m4.value >= 8.5 && neg.m4.value <= 9.5, "negative case m4 = " + std::to_string(neg.m4.value));
    out.require(neg.ks >= 0.05, "negative case ks = " + std::to_string(neg.ks));

    ExperimentScenario mixed = scenario;
    mixed.laws.cycle = {Law::gaussian(), Law::centered_gamma(1.0)};
    const ExperimentRow mix = run_experiment(mixed).rows.front();
    out.require(std::fabs(mix.m4.value - 3.0) <= 0.1, "mixed case m4 = " + std::to_string(mix.m4.value));
    out.require(mix.ks <= 0.02, "mixed case ks = " + std::to_string(mix.ks));

    const double elapsed = seconds_since(start);
    out.require(elapsed < 60.0, "Monte Carlo took " + std::to_string(elapsed) + " s (budget 60 s)");
    return out;
}

// 7. the verification suite passes and emits the known-discrepancy ledger
//    with exact computed counterparts
Outcome criterion_discrepancy_ledger() {
    Outcome out;
    VerifyOptions options;
    options.identity_cases = 25;
    options.reconstruction_cases = 40;
    options.pair_cases = 25;
    const VerifyReport report = run_verification(options);
    out.require(report.all_passed, "verification suite failed");
    out.require(report.discrepancies.size() == 3, "expected 3 ledger entries");
    const auto find = [&](const std::string& id) -> const Discrepancy* {
        for (const Discrepancy& d : report.discrepancies)
            if (d.id == id) return &d;
        return nullptr;
    };
    const Discrepancy* direction = find("gamma-hypothesis-direction");
    out.require(direction && direction->computed.contains("implemented_condition"), "hypothesis-direction entry incomplete");
    const Discrepancy* square = find("beta-distance-missing-square");
    out.require(square && square->computed.contains("squared_integral") && square->computed.contains("unsquared_integral"),
                "missing-square entry incomplete");
    const Discrepancy* printed = find("beta-printed-coefficients");
    out.require(printed && printed->computed.at("quadratic_route_at_exact_target") == "0" &&
                    printed->computed.at("printed_at_exact_target") != "0",
                "printed-coefficients entry incomplete");
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        Outcome (*run)();
    };
    const std::vector<Criterion> criteria = {
        {"1. exact identity suite (square-gamma, integration by parts, moment identity, sandwich)", criterion_identities},
        {"2. worked bound chain for H2 under the Gaussian target", criterion_worked_bounds},
        {"3. moment statistic vanishes at exact target moments", criterion_target_vanishing},
        {"4. chaos structure and the Jacobi parameter boundary", criterion_chaos_structure},
        {"5. operator-product projection oracle", criterion_projection_oracle},
        {"6. Monte Carlo fourth-moment dichotomy", criterion_monte_carlo},
        {"7. verification suite with the known-discrepancy ledger", criterion_discrepancy_ledger},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double elapsed = seconds_since(start);
        if (outcome.ok) {
            std::printf("PASS  %s  (%.2f s)\n", criterion.label, elapsed);
        } else {
            ++failures;
            std::printf("FAIL  %s  (%.2f s)\n      %s\n", criterion.label, elapsed, outcome.detail.c_str());
        }
        std::fflush(stdout);
    }
    return failures;
}
