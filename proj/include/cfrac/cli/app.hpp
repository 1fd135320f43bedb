#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfrac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `cfrac` command line. `args` includes the program name. Data goes
/// to `out` (or the --out file), diagnostics to `err`.
///
/// Exit codes: 0 success, 1 domain error or failed verification, 2 usage
/// error (unknown flags, missing arguments, malformed certificate).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfrac::cli
