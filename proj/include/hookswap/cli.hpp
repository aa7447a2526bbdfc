#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hookswap {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_counterexample = 1, ///< a verification check found a failure
    exit_usage = 2,          ///< bad flags, unparsable input or violated invariant
};

/// Runs one CLI invocation. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hookswap
