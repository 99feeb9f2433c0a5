#include "tourney/triads.hpp"

#include <string>

#include "tourney/errors.hpp"

namespace tourney {

std::string_view to_string(TriadClass c) noexcept {
  return c == TriadClass::Regular ? "Regular" : "Transitive";
}

namespace {

// A triple is cyclic iff u->v, v->w, w->u all agree in direction.
bool cyclic(const Tournament& t, Vertex u, Vertex v, Vertex w) noexcept {
  const bool uv = t.beats_unchecked(u, v);
  return uv == t.beats_unchecked(v, w) && uv == t.beats_unchecked(w, u);
}

}  // namespace

TriadClass classify_triad(const Tournament& t, Vertex u, Vertex v, Vertex w) {
  check_pair(t, u, v);
  check_pair(t, v, w);
  check_pair(t, u, w);
  return cyclic(t, u, v, w) ? TriadClass::Regular : TriadClass::Transitive;
}

std::int64_t c3_enumerative(const Tournament& t) {
  const auto n = static_cast<Vertex>(t.size());
  std::int64_t count = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      for (Vertex w = v + 1; w < n; ++w) count += cyclic(t, u, v, w);
  return count;
}

std::int64_t c3_from_in_degrees(std::span<const std::int64_t> in_degrees) {
  const auto n = static_cast<std::int64_t>(in_degrees.size());
  std::int64_t transitive = 0;
  for (std::int64_t in : in_degrees) transitive += choose(n - 1 - in, 2);
  return choose(n, 3) - transitive;
}

std::int64_t c3_fast(const Tournament& t) { return c3_from_in_degrees(in_degrees(t)); }

std::int64_t c3_from_dr(std::int64_t n, std::int64_t dr) {
  const std::int64_t gap = max_directionality(n) - dr;
  if (dr < 0 || gap < 0)
    throw UnrealizableError("directionality " + std::to_string(dr) + " outside [0, " +
                            std::to_string(max_directionality(n)) + "] for n = " +
                            std::to_string(n));
  if (gap % 8 != 0)
    throw UnrealizableError("2*C(n+1,3) - dr = " + std::to_string(gap) +
                            " is not divisible by 8 for n = " + std::to_string(n));
  return gap / 8;
}

std::int64_t dr_from_c3(std::int64_t n, std::int64_t c3) {
  const std::int64_t dr = max_directionality(n) - 8 * c3;
  if (c3 < 0 || dr < 0)
    throw UnrealizableError("c3 = " + std::to_string(c3) + " is unrealizable for n = " +
                            std::to_string(n));
  return dr;
}

}  // namespace tourney
