#pragma once

// The `coarse` command line: classify, partition, recheck and verify.
//
// Exit codes: 0 holds, 1 fails, 2 inconclusive, 3 usage or input error.

#include <ostream>
#include <string>
#include <vector>

namespace coarse {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitError = 3;

// `args` excludes the program name. JSON goes to `out` (or to --out),
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coarse
