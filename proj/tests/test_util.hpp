#pragma once

#include "eulersum/bigfloat.hpp"

namespace testutil {

inline eulersum::BigFloat ref(const char* decimal) { return eulersum::BigFloat(decimal, 400); }

// |a - b| < 10^-digits
inline bool close(const eulersum::BigFloat& a, const eulersum::BigFloat& b, int digits) {
  return abs(a - b) < eulersum::pow10(-digits, 400);
}

inline bool rel_close(const eulersum::BigFloat& a, const eulersum::BigFloat& b, int digits) {
  return abs(a - b) < eulersum::pow10(-digits, 400) * abs(b);
}

}  // namespace testutil
