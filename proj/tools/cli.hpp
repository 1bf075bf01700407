#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chainseif::cli {

enum ExitCode : int { kPass = 0, kMismatch = 1, kUsage = 2, kNumerical = 3 };

/// Runs one command line (without the program name). JSON goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chainseif::cli
