#ifndef DIFFSPEC_MONTE_CARLO_HPP
#define DIFFSPEC_MONTE_CARLO_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "diffspec/fourth_moment.hpp"
#include "diffspec/multipoly.hpp"
#include "diffspec/sampling.hpp"

namespace diffspec {

enum class SumFamily { PairedProduct, SingleTerm, Table };

/// One multilinear term of a homogeneous sum: coeff * x_{i_1} ... x_{i_d},
/// indices strictly increasing (0-based).
struct SumTerm {
    std::vector<int> indices;
    double coeff = 0.0;
};

/// Homogeneous multilinear sum P_n(x) = sum a(i_1..i_d) x_{i_1} ... x_{i_d}.
///
///   PairedProduct: n^{-1/2} * sum_{i<n} x_{2i} x_{2i+1}   (degree 2, dimension 2n)
///   SingleTerm:    x_{i_1} ... x_{i_d} for fixed indices  (dimension independent of n)
///   Table:         explicit list of terms with fixed dimension
struct HomogeneousSumSpec {
    SumFamily family = SumFamily::PairedProduct;
    int degree = 2;
    std::vector<int> single_indices;  // SingleTerm
    std::vector<SumTerm> terms;       // Table
    int table_dimension = 0;          // Table

    static HomogeneousSumSpec paired_product();
    static HomogeneousSumSpec single_term(std::vector<int> indices);
    static HomogeneousSumSpec table(int dimension, std::vector<SumTerm> terms);

    /// Validates the multilinear shape (strictly increasing indices, uniform
    /// degree); throws std::invalid_argument otherwise.
    void validate() const;

    int required_dimension(std::int64_t n) const;
    double evaluate_row(std::span<const double> row, std::int64_t n) const;
};

/// One evaluation per sample row of a row-major matrix.
std::vector<double> evaluate_sequence(const HomogeneousSumSpec& spec, std::span<const double> matrix, int dimension,
                                      std::int64_t n);

struct MomentEstimate {
    double value = 0.0;
    double se = 0.0;
};

/// mean of v^order with its standard error. Throws on empty input.
MomentEstimate empirical_moment(std::span<const double> values, int order);

/// One-sample Kolmogorov-Smirnov statistic against the target CDF.
double ks_statistic(std::span<const double> values, const TargetLaw& t);

struct ExperimentRow {
    std::int64_t n = 0;
    MomentEstimate m1, m2, m3, m4;
    double statistic = 0.0;
    double ks = 0.0;
};

struct EmpiricalReport {
    std::vector<ExperimentRow> rows;
    // final-n versus first-n comparisons of the convergence diagnostics
    double first_m4_gap = 0.0, last_m4_gap = 0.0;
    double first_ks = 0.0, last_ks = 0.0;
    bool m4_gap_decreased = false;
    bool ks_decreased = false;
};

struct ExperimentScenario {
    CoordinateLawSpec laws;
    HomogeneousSumSpec family;
    std::vector<std::int64_t> n_grid;
    std::int64_t sample_count = 0;
    std::uint64_t seed = 0;
    int chunk_size = 8192;
    TargetLaw target = TargetLaw::gaussian();
    int workers = 0;  // 0 = hardware concurrency
};

/// Streams samples chunk by chunk (in parallel when workers allow), evaluates
/// the homogeneous sum per row and aggregates the empirical diagnostics. The
/// report is a pure function of the scenario, independent of worker count.
EmpiricalReport run_experiment(const ExperimentScenario& scenario);

}  // namespace diffspec

#endif
