#ifndef DIFFSPEC_MULTIPOLY_HPP
#define DIFFSPEC_MULTIPOLY_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "diffspec/rational.hpp"

namespace diffspec {

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// The dimension is fixed per polynomial; mixing dimensions in arithmetic is an
/// error, never a coercion. Zero coefficients are never stored, so two
/// polynomials are equal iff their term maps are equal.
class MultiPoly {
  public:
    explicit MultiPoly(int dim);

    static MultiPoly constant(int dim, const Rational& c);
    static MultiPoly variable(int dim, int coord);  // x_coord, 0-based
    static MultiPoly monomial(int dim, Exponents exps, const Rational& c);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    /// Max total exponent; the zero polynomial has degree -1.
    int degree() const;

    const std::map<Exponents, Rational>& terms() const { return terms_; }
    Rational coeff(const Exponents& exps) const;
    Rational constant_term() const;

    /// Adds c * x^exps, dropping the term if the sum cancels.
    void add_term(const Exponents& exps, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& s, const MultiPoly& p);
    friend MultiPoly operator*(const MultiPoly& p, const Rational& s) { return s * p; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

    MultiPoly pow(int e) const;  // e >= 0
    MultiPoly derivative(int coord) const;

    Rational evaluate(std::span<const Rational> point) const;
    double evaluate(std::span<const double> point) const;

  private:
    void check_same_dim(const MultiPoly& o) const;

    int dim_;
    std::map<Exponents, Rational> terms_;
};

/// q(p) for univariate q: sum of q_k * p^k.
MultiPoly compose_univariate(const MultiPoly& q, const MultiPoly& p);

/// Coordinate substitution x_i -> a_i * x_i + b_i (a_i = 0 collapses the coordinate).
MultiPoly substitute_affine(const MultiPoly& p, const std::vector<std::pair<Rational, Rational>>& maps);

}  // namespace diffspec

#endif
