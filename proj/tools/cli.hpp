#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace duet::cli {

// Exit codes of the duet command.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // bad input file, invariant violation, verify mismatch
inline constexpr int kUsage = 2;

// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace duet::cli
