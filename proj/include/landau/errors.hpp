#ifndef LANDAULAB_ERRORS_HPP
#define LANDAULAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace landau {

/// Invalid user-supplied parameters or mismatched operands.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Degenerate states, blow-up, indeterminate ratios.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace landau

#endif
