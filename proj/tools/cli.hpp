#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hexstrip::cli {

/// Exit codes: 0 success, 1 an identity failed verification, 2 usage or
/// domain error (message on `err`).
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hexstrip::cli
