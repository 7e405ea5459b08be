#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitope::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kGuardViolation = 3,
};

/// Parses `args` (without the program name), runs the command and writes the
/// report to `out`; diagnostics go to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitope::cli
