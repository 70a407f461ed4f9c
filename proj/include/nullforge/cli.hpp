#pragma once

#include <string>
#include <vector>

namespace nullforge {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumericalDegeneracy = 3;

/// Dispatch a full command line (without argv[0]). Subcommands:
/// curve, surface, verify, roundtrip, examples.
int run_command(const std::vector<std::string>& args);

}  // namespace nullforge
