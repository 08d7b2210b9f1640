#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dw::cli {

/// Stable process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kValidation = 2,
    kComputationLimit = 3,
    kInternal = 4,
};

/// Runs the command line `args` (without the program name), writing reports
/// to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dw::cli
