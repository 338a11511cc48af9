#ifndef DIFFSPEC_ORTHOGONAL_HPP
#define DIFFSPEC_ORTHOGONAL_HPP

#include <functional>
#include <map>
#include <vector>

#include "diffspec/multipoly.hpp"

namespace diffspec {

enum class FamilyKind { Hermite, Laguerre, Jacobi };

/// One of the three classical orthogonal polynomial families, with rational
/// parameters. The parameters here are those of the polynomials themselves
/// (Laguerre nu > -1, Jacobi alpha, beta > -1).
class OrthogonalFamily {
  public:
    static OrthogonalFamily hermite();
    static OrthogonalFamily laguerre(const Rational& nu);
    static OrthogonalFamily jacobi(const Rational& alpha, const Rational& beta);

    FamilyKind kind() const { return kind_; }
    const Rational& param_a() const { return a_; }  // Laguerre nu / Jacobi alpha
    const Rational& param_b() const { return b_; }  // Jacobi beta

    /// The degree-n member as a univariate MultiPoly.
    MultiPoly polynomial(int n) const;

    friend bool operator==(const OrthogonalFamily&, const OrthogonalFamily&) = default;

  private:
    OrthogonalFamily(FamilyKind kind, Rational a, Rational b) : kind_(kind), a_(std::move(a)), b_(std::move(b)) {}
    FamilyKind kind_;
    Rational a_, b_;
};

/// Probabilists' Hermite polynomial: monic, H_{n+1} = x*H_n - n*H_{n-1}.
MultiPoly hermite_polynomial(int n);

/// Generalized Laguerre polynomial L_n^{(nu)} in the standard normalization,
/// by three-term recurrence. Requires nu > -1.
MultiPoly laguerre_polynomial(int n, const Rational& nu);

/// Jacobi polynomial P_n^{(alpha,beta)} in the standard normalization, by
/// three-term recurrence. Requires alpha, beta > -1.
MultiPoly jacobi_polynomial(int n, const Rational& alpha, const Rational& beta);

/// Generates the degree-k basis polynomial of one coordinate.
using BasisGenerator = std::function<MultiPoly(int)>;

/// Expands p exactly over the product basis prod_j B_{i_j}(x_j), where B is a
/// graded univariate basis (degree of B_k is exactly k). Triangular
/// elimination on the graded-leading monomial; no linear solver involved.
std::map<Exponents, Rational> expand_in_basis(const MultiPoly& p, const std::vector<BasisGenerator>& basis);

/// Expansion over the product of raw family polynomials.
std::map<Exponents, Rational> product_basis_expand(const MultiPoly& p, const std::vector<OrthogonalFamily>& families);

/// Inverse of expand_in_basis: sum of c(i) * prod_j B_{i_j}(x_j).
MultiPoly reconstruct_from_basis(int dim, const std::map<Exponents, Rational>& expansion,
                                 const std::vector<BasisGenerator>& basis);
MultiPoly reconstruct_from_basis(int dim, const std::map<Exponents, Rational>& expansion,
                                 const std::vector<OrthogonalFamily>& families);

}  // namespace diffspec

#endif
