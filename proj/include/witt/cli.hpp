#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace witt {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success or pass, 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace witt
