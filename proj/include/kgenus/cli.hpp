#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kgenus {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,         // bad flags or input
  kExitMathFailure = 2,   // congruence fails, obstruction found, property violated
  kExitInconsistent = 3,  // two independent computations disagree
};

/// Environment variable that, when set, replaces the default seed of 0.
inline constexpr const char* kSeedEnvVar = "KGENUS_SEED";

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kgenus
