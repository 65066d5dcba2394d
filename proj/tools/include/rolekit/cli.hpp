#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rolekit::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kResourceCap = 3 };

/// Runs one command line (without the program name). Primary results go to
/// `out`, diagnostics to `err`. Files named by -o/--table/--dot are written
/// only after the command has succeeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rolekit::cli
