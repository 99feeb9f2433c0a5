#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tourney {

using Vertex = std::uint32_t;

/// Number of unordered pairs on n vertices, n(n-1)/2.
constexpr std::size_t pair_count(std::size_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Lexicographic rank of the pair (i, j), i < j < n.
constexpr std::size_t pair_rank(std::size_t n, std::size_t i, std::size_t j) noexcept {
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

/// Binomial coefficient C(n, k) for the small k used here. Exact while the result fits.
constexpr std::int64_t choose(std::int64_t n, std::int64_t k) noexcept {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Complete oriented graph on n vertices stored as one bit per unordered pair.
///
/// Pair {i, j} with i < j lives at `pair_rank(n, i, j)`; a set bit means the
/// edge i -> j and a clear bit means j -> i. Completeness and the absence of
/// reciprocal edges hold by construction. Values are immutable to callers;
/// only `flip_edge` and `IncrementalTracker` reverse edges.
class Tournament {
 public:
  /// The empty tournament (n = 0).
  Tournament() = default;

  /// n vertices with every pair bit clear, i.e. j -> i for all i < j.
  explicit Tournament(std::size_t n);

  /// Builds from a predicate `forward(i, j)` evaluated for every i < j.
  template <class Forward>
  static Tournament from_predicate(std::size_t n, Forward forward) {
    Tournament t(n);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++rank)
        if (forward(static_cast<Vertex>(i), static_cast<Vertex>(j))) t.set_pair_bit(rank);
    return t;
  }

  /// Decodes the integer whose bit r is the orientation bit of the pair of rank r.
  /// Requires pair_count(n) <= 64; throws InputError otherwise.
  static Tournament from_code(std::size_t n, std::uint64_t code);

  std::size_t size() const noexcept { return n_; }
  std::size_t pairs() const noexcept { return pair_count(n_); }

  bool pair_bit(std::size_t rank) const noexcept { return (words_[rank >> 6] >> (rank & 63)) & 1U; }

  /// True iff the edge u -> v is present. Throws InputError on u == v or out of range.
  bool beats(Vertex u, Vertex v) const;

  /// Unchecked variant of `beats` for hot loops; u != v, both < size().
  bool beats_unchecked(Vertex u, Vertex v) const noexcept {
    return u < v ? pair_bit(pair_rank(n_, u, v)) : !pair_bit(pair_rank(n_, v, u));
  }

  /// Inverse of `from_code`. Requires pairs() <= 64.
  std::uint64_t code() const;

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  friend class IncrementalTracker;
  friend Tournament flip_edge(const Tournament&, Vertex, Vertex);

  void set_pair_bit(std::size_t rank) noexcept { words_[rank >> 6] |= std::uint64_t{1} << (rank & 63); }
  void toggle_pair_bit(std::size_t rank) noexcept { words_[rank >> 6] ^= std::uint64_t{1} << (rank & 63); }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Throws InputError unless v < t.size().
void check_vertex(const Tournament& t, Vertex v);

/// Throws InputError unless u, v are in range and distinct.
void check_pair(const Tournament& t, Vertex u, Vertex v);

struct DegreeSummary {
  std::vector<std::int64_t> in_degrees;
  std::vector<std::int64_t> out_degrees;
  std::vector<std::int64_t> signed_degrees;
};

DegreeSummary degree_summary(const Tournament& t);

/// In-degrees only; the hot path for the delta formulas and the tracker.
std::vector<std::int64_t> in_degrees(const Tournament& t);

/// Sum of signed degrees over `subset`, degrees taken in the whole tournament.
std::int64_t signed_degree_subset(const Tournament& t, std::span<const Vertex> subset);

/// Sum of squared signed degrees over `subset`, degrees taken in the whole tournament.
std::int64_t directionality_subset(const Tournament& t, std::span<const Vertex> subset);

/// Dr(t): squared signed degrees summed over every vertex of t.
std::int64_t local_directionality(const Tournament& t);

/// Subtournament on `subset`, relabeled 0..|subset|-1 in increasing original order.
/// Duplicate indices in `subset` are rejected.
Tournament induced_subtournament(const Tournament& t, std::span<const Vertex> subset);

/// Out-degree sequence is a permutation of {0, ..., n-1}.
bool is_transitive(const Tournament& t);

/// Every vertex has signed degree 0.
bool is_regular(const Tournament& t);

}  // namespace tourney
