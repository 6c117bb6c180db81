#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ohno::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (args excludes the program name). Returns 0 on
/// success or a passing verification, 1 on a failed verification or an
/// evaluation failure, 2 on a usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "3", "2..5" or comma-separated mixes such as "1..2,5".
std::vector<int> parse_range(const std::string& text);

}  // namespace ohno::cli
