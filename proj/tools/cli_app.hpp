#pragma once

#include <string>
#include <vector>

namespace gdpm::cli {

/// Runs the gdpm command line with the given arguments (program name
/// excluded).  Returns the process exit code: 0 on normal termination,
/// 2 on divergence or numerical failure, 3 on bad input.
int run_cli(const std::vector<std::string>& args);

}  // namespace gdpm::cli
