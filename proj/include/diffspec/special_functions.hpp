#ifndef DIFFSPEC_SPECIAL_FUNCTIONS_HPP
#define DIFFSPEC_SPECIAL_FUNCTIONS_HPP

#include "diffspec/fourth_moment.hpp"

namespace diffspec {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0. Series
/// expansion for x < a + 1, Lentz continued fraction otherwise; absolute
/// error well below 1e-10.
double regularized_gamma_p(double a, double x);

/// Regularized incomplete beta I_x(a, b), a, b > 0, x in [0, 1]. Continued
/// fraction with the symmetry reduction to the rapidly converging region.
double regularized_beta(double a, double b, double x);

/// Standard normal CDF.
double normal_cdf(double x);

/// CDF of a criterion target law at x (double-precision parameters).
double target_cdf(const TargetLaw& t, double x);

}  // namespace diffspec

#endif
