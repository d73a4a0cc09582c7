#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chow::cli {

enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kUsage = 2 };

/// Runs one chowcalc invocation; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chow::cli
