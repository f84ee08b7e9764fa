#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evenquads::cli {

/// Exit codes: 0 success, 1 verification mismatch, 2 invalid flags or input,
/// 3 runtime failure.
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace evenquads::cli
