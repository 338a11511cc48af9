#ifndef DIFFSPEC_RATIONAL_HPP
#define DIFFSPEC_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace diffspec {

/// Arbitrary-precision rational number in canonical reduced form
/// (denominator > 0, gcd(|num|, den) = 1). All arithmetic is exact.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // implicit: integer literals are rationals
    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses "p", "-p" or "p/q" with q > 0 after reduction. Throws on anything else.
    static Rational from_string(std::string_view text);

    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational numerator() const { return Rational(mpq_class(v_.get_num())); }
    Rational denominator() const { return Rational(mpq_class(v_.get_den())); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// Integer power; negative exponents invert (throws on 0^negative).
    Rational pow(long e) const;

    /// Integer value; throws unless the denominator is 1 and the value fits in long.
    long to_long() const;

  private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational rational(long num, long den = 1) { return Rational(num, den); }

}  // namespace diffspec

#endif
