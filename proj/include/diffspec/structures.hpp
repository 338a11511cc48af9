#ifndef DIFFSPEC_STRUCTURES_HPP
#define DIFFSPEC_STRUCTURES_HPP

#include <string>
#include <vector>

#include "diffspec/multipoly.hpp"
#include "diffspec/orthogonal.hpp"

namespace diffspec {

enum class CoordKind { OrnsteinUhlenbeck, Laguerre, Jacobi };

/// One coordinate of a product diffusion: the generator acting on that
/// coordinate, its invariant measure, eigenvalues and eigenfunction basis.
///
///   OU:            L f = f'' - x f',                 measure N(0,1),  basis H_k
///   Laguerre(nu):  L f = x f'' + (nu+1-x) f',        measure Gamma(nu+1)
///                  (density x^nu e^-x / Gamma(nu+1)), basis L_k^{(nu)}
///   Jacobi(a,b):   L f = x(1-x) f'' + (a-(a+b)x) f', measure Beta(a,b) on [0,1],
///                  basis P_k^{(a-1,b-1)}(1-2x)
class CoordinateStructure {
  public:
    static CoordinateStructure ornstein_uhlenbeck();
    static CoordinateStructure laguerre(const Rational& nu);                          // nu > -1
    static CoordinateStructure jacobi(const Rational& alpha, const Rational& beta);   // alpha, beta > 0

    CoordKind kind() const { return kind_; }
    const Rational& nu() const { return a_; }
    const Rational& alpha() const { return a_; }
    const Rational& beta() const { return b_; }

    /// Eigenvalue of the degree-k eigenfunction: k for OU/Laguerre,
    /// k(k + alpha + beta - 1) for Jacobi.
    Rational eigenvalue(int k) const;

    /// k-th raw moment of the invariant measure.
    Rational raw_moment(int k) const;

    /// Degree-k eigenfunction as a univariate polynomial.
    MultiPoly basis(int k) const;

    MultiPoly diffusion_coefficient() const;  // univariate second-order coefficient
    MultiPoly drift() const;                  // univariate first-order coefficient

    std::string describe() const;

    friend bool operator==(const CoordinateStructure&, const CoordinateStructure&) = default;

  private:
    CoordinateStructure(CoordKind kind, Rational a, Rational b) : kind_(kind), a_(std::move(a)), b_(std::move(b)) {}
    CoordKind kind_;
    Rational a_, b_;
};

/// Tensor product of coordinate diffusions: L = sum of the coordinate
/// generators, invariant measure the product measure.
class ProductStructure {
  public:
    explicit ProductStructure(std::vector<CoordinateStructure> coords);

    int dim() const { return static_cast<int>(coords_.size()); }
    const CoordinateStructure& coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<CoordinateStructure>& coords() const { return coords_; }

    bool has_jacobi_coordinate() const;
    std::string describe() const;

    friend bool operator==(const ProductStructure&, const ProductStructure&) = default;

  private:
    std::vector<CoordinateStructure> coords_;
};

/// L p, exactly. Degree never increases and constants are annihilated.
MultiPoly apply_generator(const ProductStructure& s, const MultiPoly& p);

/// Carre du champ Gamma(p, q) = (L(pq) - p Lq - q Lp) / 2.
MultiPoly carre_du_champ(const ProductStructure& s, const MultiPoly& p, const MultiPoly& q);
MultiPoly carre_du_champ(const ProductStructure& s, const MultiPoly& p);

/// Exact integral of p against the invariant product measure, via the
/// per-coordinate raw-moment tables.
Rational integrate(const ProductStructure& s, const MultiPoly& p);

/// k-th moment of the random variable p under the invariant measure.
Rational moment(const ProductStructure& s, const MultiPoly& p, int k);

Rational coordinate_eigenvalue(const CoordinateStructure& c, int k);
MultiPoly coordinate_basis(const CoordinateStructure& c, int k);

/// prod_j B_{idx_j}(x_j) lifted to the product space.
MultiPoly basis_product(const ProductStructure& s, const Exponents& idx);

/// Smallest non-zero eigenvalue of the product generator.
Rational smallest_positive_eigenvalue(const ProductStructure& s);

}  // namespace diffspec

#endif
