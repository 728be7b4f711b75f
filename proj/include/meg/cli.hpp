#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "meg/error.hpp"

namespace meg::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitMismatch = 4;
inline constexpr int kExitLimit = 5;

int exit_code(ErrorKind kind);

// Runs megsolve with `args` (program name excluded). The JSON report or edge
// list goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace meg::cli
