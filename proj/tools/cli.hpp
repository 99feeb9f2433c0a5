#pragma once

#include <iosfwd>

namespace tourney::cli {

/// Exit codes: 0 success, 1 a check failed (counterexamples, bench mismatch), 2 bad input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs the `tourney` command line against the given streams. Standard input is
/// only read when a FILE argument is "-".
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tourney::cli
