#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catalan::cli {

enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1,
    kUsageError = 2,
    kIoError = 3,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catalan::cli
