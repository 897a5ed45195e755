#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dynzeta {

/// Exit codes: 0 success (and all checks pass), 1 a mathematical check
/// failed on valid input, 2 malformed input or usage error. There are no
/// other codes.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one CLI invocation. `args` excludes the program name. All JSON
/// goes to `out`; diagnostics only to `err`. `in` backs "--input -".
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in);

}  // namespace dynzeta
