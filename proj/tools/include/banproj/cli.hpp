#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace banproj::cli {

enum ExitCode : int {
  kOk = 0,
  kBadInput = 1,
  kUnexpectedDiscrepancy = 2,
  kSolverFailure = 3,
};

/// Runs the command line `args` (args[0] is the program name). The JSON result
/// goes to `out`, diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace banproj::cli
