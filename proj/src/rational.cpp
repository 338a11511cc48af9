#include "diffspec/rational.hpp"

#include <cctype>
#include <ostream>

namespace diffspec {

Rational Rational::from_string(std::string_view text) {
    // Strict shape check before handing off to GMP: [-]digits[/digits].
    const auto fail = [&] {
        throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    };
    if (text.empty()) fail();
    std::size_t i = 0;
    if (text[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) { ++i; ++digits; }
    if (digits == 0) fail();
    if (i < text.size()) {
        if (text[i] != '/') fail();
        ++i;
        digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) { ++i; ++digits; }
        if (digits == 0 || i != text.size()) fail();
    }
    mpq_class v;
    if (v.set_str(std::string(text), 10) != 0) fail();
    if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw std::invalid_argument("Rational: 0 raised to negative power");
        return (Rational(1) / *this).pow(-e);
    }
    Rational base = *this;
    Rational out = 1;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

long Rational::to_long() const {
    if (!is_integer()) throw std::invalid_argument("Rational: " + str() + " is not an integer");
    const mpz_class num = v_.get_num();
    if (!num.fits_slong_p()) throw std::invalid_argument("Rational: " + str() + " does not fit in long");
    return num.get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace diffspec
