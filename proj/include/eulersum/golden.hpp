#pragma once

#include <string_view>
#include <vector>

#include "eulersum/closed_forms.hpp"
#include "eulersum/oracle.hpp"
#include "eulersum/symbolic.hpp"

namespace eulersum {

/// A reference expression for A(p,q,n) or B(p,q,n), stored as a fixture
/// rather than derived from the builders.
struct GoldenExample {
  oracle::Kind kind = oracle::Kind::A;
  EulerSumParams params;
  ConstExpr expected;
};

/// Parses `{"examples":[{"kind","p","q","n","expr":{...}}]}`.
std::vector<GoldenExample> parse_golden(std::string_view json_text);

/// The six built-in examples (embedded from data/golden_examples.json).
const std::vector<GoldenExample>& golden_examples();

/// Closed form for a golden entry's kind and parameters.
ConstExpr build_closed(oracle::Kind kind, const EulerSumParams& params);

}  // namespace eulersum
