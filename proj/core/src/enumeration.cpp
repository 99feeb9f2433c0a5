#include "tourney/enumeration.hpp"

#include <random>
#include <string>

#include "tourney/errors.hpp"

namespace tourney {

namespace {

// Uniform on [0, bound) by rejection then modulo. std::uniform_int_distribution is
// implementation-defined; this is not.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t reject_below = (0 - bound) % bound;
  std::uint64_t draw = rng();
  while (draw < reject_below) draw = rng();
  return draw % bound;
}

}  // namespace

Tournament transitive_tournament(std::size_t n) {
  return Tournament::from_predicate(n, [](Vertex, Vertex) { return true; });
}

Tournament rotational_tournament(std::size_t n) {
  if (n % 2 == 0)
    throw InputError("regular tournaments need an odd vertex count, got " + std::to_string(n));
  const std::size_t half = (n - 1) / 2;
  return Tournament::from_predicate(n, [&](Vertex i, Vertex j) { return j - i <= half; });
}

Tournament random_tournament(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return Tournament::from_predicate(n, [&](Vertex, Vertex) { return (rng() >> 63) != 0; });
}

std::vector<std::pair<Vertex, Vertex>> random_flip_pairs(std::size_t n, std::size_t count,
                                                         std::uint64_t seed) {
  if (n < 2) throw InputError("flip pairs need at least 2 vertices, got " + std::to_string(n));
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto v = static_cast<Vertex>(uniform_below(rng, n));
    auto w = static_cast<Vertex>(uniform_below(rng, n - 1));
    if (w >= v) ++w;
    pairs.emplace_back(v, w);
  }
  return pairs;
}

std::uint64_t labeled_count(std::size_t n) {
  if (n > kMaxEnumerableN)
    throw InputError("exhaustive enumeration supports n <= " + std::to_string(kMaxEnumerableN) +
                     ", got " + std::to_string(n));
  return std::uint64_t{1} << pair_count(n);
}

TournamentRange enumerate_all(std::size_t n) { return {n, 0, labeled_count(n)}; }

}  // namespace tourney
