#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ncat::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 validation or domain error, 2 parse or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncat::cli
