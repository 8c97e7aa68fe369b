#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arcbound::cli {

inline constexpr const char* kToolName = "arcbound";
inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kSuccess = 0,
  kBoundFails = 1,   // verify-minor-arcs found a margin ≥ 0
  kUsage = 2,        // bad flags, malformed rationals or files, guard violations
  kConsistency = 3,  // engines or methods disagree, or a numeric check could not settle
};

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arcbound::cli
