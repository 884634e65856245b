#pragma once

#include <ostream>
#include <span>
#include <string>

namespace coverbound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 when every check passes, 1 when a check
/// fails, 2 on usage or input errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace coverbound::cli
