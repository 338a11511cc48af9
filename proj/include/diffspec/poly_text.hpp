#ifndef DIFFSPEC_POLY_TEXT_HPP
#define DIFFSPEC_POLY_TEXT_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "diffspec/multipoly.hpp"

namespace diffspec {

/// Parse failure with the byte offset of the offending character.
class PolyParseError : public std::runtime_error {
  public:
    PolyParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/// Text form: sum of terms `coeff * x1^a1 * ... * xd^ad` with `p/q` rational
/// coefficients, e.g. "-1 + 1*x1^2". parse_poly(print_poly(p), p.dim()) == p.
std::string print_poly(const MultiPoly& p);

/// Accepts the printer's output plus minor variations (free whitespace,
/// omitted "^1", omitted "1*", signed separators). Coordinates are 1-based in
/// the text and must not exceed dim.
MultiPoly parse_poly(std::string_view text, int dim);

}  // namespace diffspec

#endif
