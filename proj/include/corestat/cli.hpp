#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace corestat {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

/// Entry point of the command-line tool; args exclude the program name.
/// Returns 0 on success, 1 on usage errors, 2 on verification or diff failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Inclusive range "a..b", or a single integer "a".
std::pair<int, int> parse_range(const std::string& text);

}  // namespace corestat
