#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ohg::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kNegative = 1;  // check failed or property violated
constexpr int kUsage = 2;
constexpr int kUnknown = 3;   // analysis stopped at a limit

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ohg::cli
