#pragma once

#include <stdexcept>
#include <string>

namespace eulersum {

/// Raised when a parameter tuple violates a precondition (parity, range).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by numeric engines that fail their own convergence check.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eulersum
