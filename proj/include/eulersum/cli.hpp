#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "eulersum/symbolic.hpp"

namespace eulersum::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidParameters = 2;

struct CliConfig {
  int digits = 40;
  int tolerance_exponent = 20;
  SimplifyFlags simplify{};
  Format format = Format::plain;

  /// digits >= 15 and tolerance_exponent < digits.
  void require_valid() const;
};

/// Runs `eulersum <args...>` (args excludes the program name), writing
/// normal output to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulersum::cli
