#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fcaffine {

/// Runs the command line with `args` (program name excluded). Returns the
/// process exit status: 0 on success, 1 when a requested check fails, 2 on
/// usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fcaffine
