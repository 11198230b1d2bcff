#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rrcf::cli {

/// Exit codes: 0 success (all checks pass), 1 a check failed, 2 usage or domain error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` includes the program name as args[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rrcf::cli
