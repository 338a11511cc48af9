#include "diffspec/poly_text.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace diffspec {

std::string print_poly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, c] : p.terms()) {
        Rational coeff = c;
        if (first) {
            first = false;
        } else if (coeff.sign() < 0) {
            os << " - ";
            coeff = -coeff;
        } else {
            os << " + ";
        }
        os << coeff.str();
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) os << "*x" << (i + 1) << "^" << exps[i];
    }
    return os.str();
}

namespace {

class Parser {
  public:
    Parser(std::string_view text, int dim) : text_(text), dim_(dim) {}

    MultiPoly run() {
        MultiPoly out(dim_);
        skip_ws();
        if (at_end()) throw PolyParseError("empty polynomial", pos_);
        bool negate = consume_sign();
        parse_term(out, negate);
        skip_ws();
        while (!at_end()) {
            const char sep = text_[pos_];
            if (sep != '+' && sep != '-') throw PolyParseError("expected '+' or '-'", pos_);
            ++pos_;
            skip_ws();
            negate = (sep == '-');
            if (consume_sign()) negate = !negate;
            parse_term(out, negate);
            skip_ws();
        }
        return out;
    }

  private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume_sign() {
        if (peek() == '-') {
            ++pos_;
            skip_ws();
            return true;
        }
        return false;
    }

    long parse_integer(const char* what) {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw PolyParseError(std::string("expected ") + what, pos_);
        long value = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            if (value > (std::numeric_limits<long>::max() - 9) / 10)
                throw PolyParseError("integer literal too large", start);
            value = value * 10 + (text_[i] - '0');
        }
        return value;
    }

    Rational parse_rational() {
        const std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) ++pos_;
        try {
            return Rational::from_string(text_.substr(start, pos_ - start));
        } catch (const std::invalid_argument&) {
            throw PolyParseError("malformed rational coefficient", start);
        }
    }

    void parse_factor(Exponents& exps) {
        ++pos_;  // 'x'
        const std::size_t at = pos_;
        const long coord = parse_integer("coordinate index");
        if (coord < 1 || coord > dim_)
            throw PolyParseError("coordinate index out of range for dimension " + std::to_string(dim_), at);
        long exp = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            exp = parse_integer("exponent");
        }
        if (exp > 1'000'000) throw PolyParseError("exponent too large", at);
        exps[static_cast<std::size_t>(coord - 1)] += static_cast<int>(exp);
    }

    void parse_term(MultiPoly& out, bool negate) {
        Rational coeff = 1;
        Exponents exps(static_cast<std::size_t>(dim_), 0);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_rational();
        } else if (peek() == 'x') {
            parse_factor(exps);
        } else {
            throw PolyParseError("expected coefficient or variable", pos_);
        }
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            skip_ws();
            if (peek() != 'x') throw PolyParseError("expected variable after '*'", pos_);
            parse_factor(exps);
            skip_ws();
        }
        out.add_term(exps, negate ? -coeff : coeff);
    }

    std::string_view text_;
    int dim_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, int dim) {
    if (dim < 1) throw std::invalid_argument("parse_poly: dimension must be positive");
    return Parser(text, dim).run();
}

}  // namespace diffspec
