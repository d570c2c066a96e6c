#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vbs::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kBudgetError = 3,
};

// Environment variable holding the default amplitude budget.
inline constexpr const char* kBudgetEnvVar = "VBS_BUDGET_AMPS";

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out` (or to --out), diagnostics to `err`. Nothing is written to `out` or
/// the output file unless the whole command succeeds.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vbs::cli
