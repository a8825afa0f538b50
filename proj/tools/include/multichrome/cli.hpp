#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multichrome::cli {

// Exit codes.
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int usage_error = 2;
inline constexpr int missing_file = 3;
inline constexpr int invalid_input = 4;

/// Runs the tool on `args` (without the program name). Help text goes to
/// `out`; failures are reported to `err` as one JSON line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multichrome::cli
