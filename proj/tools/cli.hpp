#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace penergy::cli {

// Process exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCounterexample = 3;

// Runs one command line (args excludes the program name). Report output goes
// to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace penergy::cli
