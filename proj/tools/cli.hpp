#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polymap::cli {

/// Full command-line entry point. Returns the process exit code:
/// 0 success, 1 failed check or computation error, 2 usage error.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace polymap::cli
