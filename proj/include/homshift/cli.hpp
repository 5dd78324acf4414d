#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homshift::cli {

/// Exit codes shared by every subcommand that produces a verdict.
enum ExitCode : int { kBounded = 0, kError = 1, kDivergent = 2, kInconclusive = 3 };

/// Runs `homshift <args...>` (args excludes the program name). Reports go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homshift::cli
