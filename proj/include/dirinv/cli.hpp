#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dirinv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBoundFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitHypothesis = 3;
inline constexpr int kExitResource = 4;

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dirinv::cli
