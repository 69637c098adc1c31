#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace liegeom::cli {

/// Runs the command line (without the program name). Exit codes: 0 success,
/// 1 check failure or input error, 2 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace liegeom::cli
