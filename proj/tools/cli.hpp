#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdt::cli {

/// Exit codes: 0 success, 1 a mathematical check failed, 2 invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Run the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdt::cli
