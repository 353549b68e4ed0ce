#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bohr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitSweepPartial = 4;
inline constexpr int kExitVerifyFailed = 5;

// args excludes the program name. Data goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bohr::cli
