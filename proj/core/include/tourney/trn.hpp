#pragma once

#include <string>
#include <string_view>

#include "tourney/tournament.hpp"

namespace tourney {

// TRN text format: a decimal vertex count on the first line, then n(n-1)/2
// characters over {'0','1'} in lexicographic pair order, '1' at the rank of
// (i, j) meaning i -> j. A single trailing newline is optional on input and
// always written on output. The empty tournament is "0\n\n"; for n < 2 the
// empty bitstring line may be omitted on input.

/// Throws ParseError naming the 1-based line and column of the first problem.
Tournament parse_trn(std::string_view text);

std::string write_trn(const Tournament& t);

}  // namespace tourney
