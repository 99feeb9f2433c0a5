#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <utility>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// Edge i -> j for every i < j.
Tournament transitive_tournament(std::size_t n);

/// Edge i -> j iff (j - i) mod n is in {1, ..., (n-1)/2}. Regular; n must be odd.
Tournament rotational_tournament(std::size_t n);

/// One std::mt19937_64 draw per pair in lexicographic order, seeded with `seed`;
/// the pair bit is the top bit of the draw. mt19937_64 is fully specified by the
/// C++ standard, so (n, seed) determines the tournament on every platform.
Tournament random_tournament(std::size_t n, std::uint64_t seed);

/// `count` ordered pairs (v, w), v != w, drawn from std::mt19937_64(seed): v uniform
/// on [0, n), then w uniform on the other n-1 vertices, each by rejection and modulo. Requires n >= 2.
std::vector<std::pair<Vertex, Vertex>> random_flip_pairs(std::size_t n, std::size_t count,
                                                         std::uint64_t seed);

/// Largest vertex count enumerate_all accepts (C(11,2) = 55 <= 62 < C(12,2)).
inline constexpr std::size_t kMaxEnumerableN = 11;

/// 2^C(n,2), the number of labeled tournaments on n vertices. Requires n <= kMaxEnumerableN.
std::uint64_t labeled_count(std::size_t n);

/// Every labeled tournament on n vertices, in increasing code order. Lazy.
class TournamentRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Tournament;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Tournament;

    iterator() = default;
    iterator(std::size_t n, std::uint64_t code) : n_(n), code_(code) {}

    Tournament operator*() const { return Tournament::from_code(n_, code_); }
    iterator& operator++() {
      ++code_;
      return *this;
    }
    void operator++(int) { ++code_; }
    std::uint64_t code() const noexcept { return code_; }
    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.code_ == b.code_;
    }

   private:
    std::size_t n_ = 0;
    std::uint64_t code_ = 0;
  };

  TournamentRange(std::size_t n, std::uint64_t first, std::uint64_t last)
      : n_(n), first_(first), last_(last) {}

  iterator begin() const { return {n_, first_}; }
  iterator end() const { return {n_, last_}; }
  std::uint64_t size() const noexcept { return last_ - first_; }

 private:
  std::size_t n_;
  std::uint64_t first_;
  std::uint64_t last_;
};

/// All 2^C(n,2) labeled tournaments. Throws InputError when C(n,2) > 62.
TournamentRange enumerate_all(std::size_t n);

}  // namespace tourney
