#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// Forward: the edge v -> w is present before the flip. Backward: w -> v is.
enum class FlipCase { Forward, Backward };

std::string_view to_string(FlipCase c) noexcept;

/// Predicted effect of reversing the edge between v and w.
///
/// k = in(w) - in(v). Forward: dr_delta = -8(k-1), c3_delta = k-1.
/// Backward: dr_delta = 8(k+1), c3_delta = -(k+1). Both framings of the same
/// pair give the same deltas. `hypothesis_satisfied` records sd(v) >= sd(w);
/// the deltas do not depend on it.
struct FlipReport {
  Vertex v = 0;
  Vertex w = 0;
  FlipCase flip_case = FlipCase::Forward;
  std::int64_t k = 0;
  std::int64_t dr_delta = 0;
  std::int64_t c3_delta = 0;
  bool hypothesis_satisfied = false;

  friend bool operator==(const FlipReport&, const FlipReport&) = default;
};

/// Copy of t with the {u, v} edge reversed.
Tournament flip_edge(const Tournament& t, Vertex u, Vertex v);

FlipReport predict_flip(const Tournament& t, Vertex v, Vertex w);

/// Same prediction from a known in-degree sequence; no validation.
FlipReport predict_flip_unchecked(const Tournament& t, std::span<const std::int64_t> in_degrees,
                                  Vertex v, Vertex w) noexcept;

/// Triads {u, v, w} that stop being cyclic (destroyed) or become cyclic (created)
/// when the v-w edge is reversed. Counted by brute force over every third vertex.
struct TriadCensus {
  std::int64_t destroyed = 0;
  std::int64_t created = 0;

  friend bool operator==(const TriadCensus&, const TriadCensus&) = default;
};

TriadCensus flip_triad_census(const Tournament& t, Vertex v, Vertex w);

enum class ConeDirection { AllOut, AllIn };

std::string_view to_string(ConeDirection d) noexcept;

/// Adds vertex n whose every edge leaves it (AllOut) or enters it (AllIn).
/// c3 is unchanged and Dr grows by n^2 + n.
Tournament cone_extend(const Tournament& t, ConeDirection direction);

/// Keeps Dr, c3 and in-degrees of a tournament current under single-edge flips,
/// each flip in O(1).
///
/// Single writer: share for reads only, or hand off between threads.
class IncrementalTracker {
 public:
  explicit IncrementalTracker(Tournament initial);

  /// Predicts, then applies, the flip of the v-w edge. On InputError the
  /// tracker is unchanged.
  FlipReport apply_flip(Vertex v, Vertex w);

  const Tournament& current() const noexcept { return current_; }
  std::span<const std::int64_t> in_degrees() const noexcept { return in_degrees_; }
  std::int64_t dr() const noexcept { return dr_; }
  std::int64_t c3() const noexcept { return c3_; }
  std::uint64_t flips_applied() const noexcept { return flips_applied_; }

 private:
  Tournament current_;
  std::vector<std::int64_t> in_degrees_;
  std::int64_t dr_ = 0;
  std::int64_t c3_ = 0;
  std::uint64_t flips_applied_ = 0;
};

}  // namespace tourney
