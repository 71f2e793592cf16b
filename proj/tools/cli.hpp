#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdgalab::cli {

enum ExitCode : int { kOk = 0, kNonvanishing = 1, kUsage = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdgalab::cli
