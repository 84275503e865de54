#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace descentkit::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
    kGuardExceeded = 3,
};

/// Environment variable that overrides every size guard.
inline constexpr const char* kMaxNEnv = "DESCENTKIT_MAX_N";

/// Runs the command line `args` (args[0] is the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace descentkit::cli
