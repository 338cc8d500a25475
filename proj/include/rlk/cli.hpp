#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rlk {

/**
 * Runs the command-line tool on `args` (program name excluded), writing to
 * the given streams.  Returns the process exit status: 0 on success,
 * nonzero on usage or computational errors, and for `verify` nonzero when
 * any check fails.
 */
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rlk
