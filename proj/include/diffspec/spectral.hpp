#ifndef DIFFSPEC_SPECTRAL_HPP
#define DIFFSPEC_SPECTRAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffspec/structures.hpp"

namespace diffspec {

/// Exact eigenspace decomposition p = sum of components, where the component
/// at eigenvalue eta satisfies L J = -eta J. Components are mutually
/// orthogonal under the invariant measure. The zero polynomial decomposes to
/// an empty map.
struct SpectralDecomposition {
    int dim = 0;
    std::map<Rational, MultiPoly> components;

    std::vector<Rational> support() const;
    const MultiPoly* find(const Rational& eta) const;
    MultiPoly reconstruct() const;
    Rational max_eigenvalue() const;  // 0 for the empty decomposition
};

SpectralDecomposition decompose(const ProductStructure& s, const MultiPoly& p);

/// J_eta(p): the component of p at eigenvalue eta, or the zero polynomial.
MultiPoly project(const ProductStructure& s, const MultiPoly& p, const Rational& eta);

/// The projection evaluated through the explicit operator product
/// prod_{lambda in support, lambda != eta} (lambda - eta)^{-1} (L + lambda Id).
/// `support` must cover every eigenvalue of p's decomposition, contain eta,
/// and be free of repeats.
MultiPoly project_operator_formula(const ProductStructure& s, const MultiPoly& p, const Rational& eta,
                                   const std::vector<Rational>& support);

/// The eigenvalue of p if p is a (non-zero) eigenfunction, otherwise nullopt.
/// Throws on the zero polynomial.
std::optional<Rational> eigenvalue_of(const ProductStructure& s, const MultiPoly& p);

/// Chaos diagnosis of an eigenfunction X: the support of the decomposition of
/// X^2 must stay below the structural doubling threshold.
struct ChaosReport {
    std::optional<Rational> eigenvalue;   // lambda_X when X is an eigenfunction
    std::vector<Rational> square_support; // eigenvalues appearing in X^2
    Rational max_support = 0;
    Rational threshold = 0;
    bool is_chaotic = false;
    std::string reason;                   // non-empty when not chaotic
};

ChaosReport chaos_check(const ProductStructure& s, const MultiPoly& x);

/// All index vectors (j_1..j_d) with sum_i lambda^{(i)}(j_i) = lambda.
std::vector<Exponents> eigen_index_vectors(const ProductStructure& s, const Rational& lambda);

/// Doubling threshold consumed by the chaos definition: max over index
/// vectors representing lambda of sum_i lambda^{(i)}(2 j_i). Equals 2*lambda
/// when no Jacobi coordinate is present.
Rational chaos_threshold(const ProductStructure& s, const Rational& lambda);

/// Max of lambda_{2 j_1} + ... + lambda_{2 j_d} over all representations of
/// the eigenvalue of `indices` in the d-dimensional Jacobi structure with the
/// given parameters, lambda_k = k(k + alpha + beta - 1).
Rational jacobi_support_bound(const Exponents& indices, const Rational& alpha, const Rational& beta);

/// Sandwich of the spectral principle: i2 = int p (L+eta)^2 p, i1 = int p
/// (L+eta) p, and 1/c the smallest non-zero value of eta - lambda over the
/// support; checks i2 <= eta*i1 <= c*eta*i2 exactly.
struct SandwichResult {
    Rational i2, i1, c;
    bool sandwich_ok = false;
};

SandwichResult general_principle(const ProductStructure& s, const MultiPoly& p, const Rational& eta);

}  // namespace diffspec

#endif
