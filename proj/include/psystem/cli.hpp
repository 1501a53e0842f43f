#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psystem {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Entry point of the command-line tool. `args` excludes the program name.
/// Subcommands: tables, analyze, shock, entropy, simulate. Diagnostics go to
/// `err` with verbosity taken from PSYSTEM_LOG (debug, info, warn).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace psystem
