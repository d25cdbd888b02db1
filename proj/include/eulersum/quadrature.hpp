#pragma once

#include <functional>

#include "eulersum/bigfloat.hpp"

namespace eulersum::quadrature {

/// Integrand on (0, 1). Receives x together with 1 - x so that singular
/// behaviour at the right endpoint can be resolved without cancellation.
using Integrand = std::function<BigFloat(const BigFloat& x, const BigFloat& one_minus_x)>;

struct Result {
  BigFloat value;
  /// |I_L - I_{L-1}| at the last level computed.
  BigFloat last_difference;
  int levels = 0;
  long evaluations = 0;
};

/// Tanh-sinh (double exponential) rule on [0, 1]. Halves the step until two
/// successive levels differ by less than `tolerance` or `max_levels` is
/// reached; throws ConvergenceError in the latter case.
Result tanh_sinh(const Integrand& f, mpfr_prec_t bits, int max_levels, const BigFloat& tolerance);

}  // namespace eulersum::quadrature
