#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace svid::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kParseFailure = 2,   ///< unreadable or malformed input file
    kConfigFailure = 3,  ///< bad flags or parameter values
    kRuntimeFailure = 4, ///< everything else
};

/// Runs the command line (args excludes the program name). Normal output goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace svid::cli
