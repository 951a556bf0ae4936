#pragma once

// Command-line front end. Exit codes:
//   0  every check passed
//   1  a counterexample was found
//   2  precondition violation (bad input, non-dominated pair, ...)
//   64 usage error (bad flags, unknown instance or function)

#include <iosfwd>
#include <string>
#include <vector>

namespace convex::cli {

inline constexpr int kOk = 0;
inline constexpr int kCounterexample = 1;
inline constexpr int kPrecondition = 2;
inline constexpr int kUsage = 64;

/// Environment variable consulted for the default --seed.
inline constexpr const char* kSeedEnv = "CONVEX_SEED";

/// Instances accepted by `laws --instance`.
std::vector<std::string> instance_names();

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace convex::cli
