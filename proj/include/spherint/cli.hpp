#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spherint {

/// Runs the spherint command line (subcommands: eval, validate, select,
/// convergence, efficiency).  Returns the process exit code:
///   0 success, 2 input parse error, 3 fatal validation problem,
///   4 numerical failure.  Argument errors use CLI11's exit codes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace spherint
