#pragma once

#include <cstdint>
#include <string_view>

#include "tourney/tournament.hpp"

namespace tourney {

/// A 3-subtournament is either a directed 3-cycle or a total order.
enum class TriadClass { Regular, Transitive };

std::string_view to_string(TriadClass c) noexcept;

/// Throws InputError on repeated or out-of-range vertices.
TriadClass classify_triad(const Tournament& t, Vertex u, Vertex v, Vertex w);

/// Cyclic triads counted by classifying all C(n,3) triples. O(n^3); the oracle for the other paths.
std::int64_t c3_enumerative(const Tournament& t);

/// C(n,3) - sum_v C(out(v), 2). O(n^2) including the degree pass.
std::int64_t c3_fast(const Tournament& t);

/// Same count from an already known in-degree sequence, O(n).
std::int64_t c3_from_in_degrees(std::span<const std::int64_t> in_degrees);

/// Upper end of the directionality range, 2 C(n+1, 3); attained by transitive tournaments.
constexpr std::int64_t max_directionality(std::int64_t n) noexcept { return 2 * choose(n + 1, 3); }

/// (2 C(n+1,3) - dr) / 8. Throws UnrealizableError when that is negative or not integral.
std::int64_t c3_from_dr(std::int64_t n, std::int64_t dr);

/// 2 C(n+1,3) - 8 c3. Throws UnrealizableError when the result would be negative.
std::int64_t dr_from_c3(std::int64_t n, std::int64_t c3);

}  // namespace tourney
