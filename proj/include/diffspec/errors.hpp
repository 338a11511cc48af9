#ifndef DIFFSPEC_ERRORS_HPP
#define DIFFSPEC_ERRORS_HPP

#include <stdexcept>

namespace diffspec {

/// An exact mathematical consistency check failed. Carries the serialized
/// counterexample in what(). Distinct from std::invalid_argument, which marks
/// bad input.
class MathAssertionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace diffspec

#endif
