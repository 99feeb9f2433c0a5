#include "tourney/tournament.hpp"

#include <algorithm>
#include <string>

#include "tourney/errors.hpp"

namespace tourney {

Tournament::Tournament(std::size_t n) : n_(n), words_((pair_count(n) + 63) / 64, 0) {}

Tournament Tournament::from_code(std::size_t n, std::uint64_t code) {
  if (pair_count(n) > 64)
    throw InputError("code representation needs n(n-1)/2 <= 64, got n = " + std::to_string(n));
  Tournament t(n);
  if (!t.words_.empty()) {
    const std::size_t p = t.pairs();
    t.words_[0] = p == 64 ? code : code & ((std::uint64_t{1} << p) - 1);
  }
  return t;
}

std::uint64_t Tournament::code() const {
  if (pairs() > 64)
    throw InputError("code representation needs n(n-1)/2 <= 64, got n = " + std::to_string(n_));
  return words_.empty() ? 0 : words_[0];
}

bool Tournament::beats(Vertex u, Vertex v) const {
  check_pair(*this, u, v);
  return beats_unchecked(u, v);
}

void check_vertex(const Tournament& t, Vertex v) {
  if (v >= t.size())
    throw InputError("vertex " + std::to_string(v) + " out of range for n = " +
                     std::to_string(t.size()));
}

void check_pair(const Tournament& t, Vertex u, Vertex v) {
  check_vertex(t, u);
  check_vertex(t, v);
  if (u == v) throw InputError("vertices must be distinct, got " + std::to_string(u) + " twice");
}

std::vector<std::int64_t> in_degrees(const Tournament& t) {
  const std::size_t n = t.size();
  std::vector<std::int64_t> in(n, 0);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++rank) {
      const std::int64_t forward = t.pair_bit(rank);
      in[j] += forward;
      in[i] += 1 - forward;
    }
  return in;
}

DegreeSummary degree_summary(const Tournament& t) {
  const auto n = static_cast<std::int64_t>(t.size());
  DegreeSummary s;
  s.in_degrees = in_degrees(t);
  s.out_degrees.reserve(s.in_degrees.size());
  s.signed_degrees.reserve(s.in_degrees.size());
  for (std::int64_t in : s.in_degrees) {
    s.out_degrees.push_back(n - 1 - in);
    s.signed_degrees.push_back(2 * in - (n - 1));
  }
  return s;
}

std::int64_t signed_degree_subset(const Tournament& t, std::span<const Vertex> subset) {
  for (Vertex v : subset) check_vertex(t, v);
  const auto in = in_degrees(t);
  const auto n = static_cast<std::int64_t>(t.size());
  std::int64_t sum = 0;
  for (Vertex v : subset) sum += 2 * in[v] - (n - 1);
  return sum;
}

std::int64_t directionality_subset(const Tournament& t, std::span<const Vertex> subset) {
  for (Vertex v : subset) check_vertex(t, v);
  const auto in = in_degrees(t);
  const auto n = static_cast<std::int64_t>(t.size());
  std::int64_t sum = 0;
  for (Vertex v : subset) {
    const std::int64_t sd = 2 * in[v] - (n - 1);
    sum += sd * sd;
  }
  return sum;
}

std::int64_t local_directionality(const Tournament& t) {
  const auto n = static_cast<std::int64_t>(t.size());
  std::int64_t sum = 0;
  for (std::int64_t in : in_degrees(t)) {
    const std::int64_t sd = 2 * in - (n - 1);
    sum += sd * sd;
  }
  return sum;
}

Tournament induced_subtournament(const Tournament& t, std::span<const Vertex> subset) {
  for (Vertex v : subset) check_vertex(t, v);
  std::vector<Vertex> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("vertex subset contains a repeated index");
  return Tournament::from_predicate(
      sorted.size(), [&](Vertex i, Vertex j) { return t.beats_unchecked(sorted[i], sorted[j]); });
}

bool is_transitive(const Tournament& t) {
  const auto n = static_cast<std::int64_t>(t.size());
  std::vector<bool> seen(t.size(), false);
  for (std::int64_t in : in_degrees(t)) {
    const std::int64_t out = n - 1 - in;
    if (seen[out]) return false;
    seen[out] = true;
  }
  return true;
}

bool is_regular(const Tournament& t) {
  const auto n = static_cast<std::int64_t>(t.size());
  const auto in = in_degrees(t);
  return std::all_of(in.begin(), in.end(), [n](std::int64_t d) { return 2 * d == n - 1; });
}

}  // namespace tourney
