#include "tourney/flip.hpp"

#include <utility>

#include "tourney/triads.hpp"

namespace tourney {

std::string_view to_string(FlipCase c) noexcept {
  return c == FlipCase::Forward ? "Forward" : "Backward";
}

std::string_view to_string(ConeDirection d) noexcept {
  return d == ConeDirection::AllOut ? "AllOut" : "AllIn";
}

Tournament flip_edge(const Tournament& t, Vertex u, Vertex v) {
  check_pair(t, u, v);
  Tournament flipped = t;
  flipped.toggle_pair_bit(u < v ? pair_rank(t.size(), u, v) : pair_rank(t.size(), v, u));
  return flipped;
}

FlipReport predict_flip_unchecked(const Tournament& t, std::span<const std::int64_t> in_degrees,
                                  Vertex v, Vertex w) noexcept {
  FlipReport r;
  r.v = v;
  r.w = w;
  r.k = in_degrees[w] - in_degrees[v];
  // sd = 2 in - (n - 1), so sd(v) >= sd(w) iff in(v) >= in(w).
  r.hypothesis_satisfied = in_degrees[v] >= in_degrees[w];
  if (t.beats_unchecked(v, w)) {
    r.flip_case = FlipCase::Forward;
    r.c3_delta = r.k - 1;
  } else {
    r.flip_case = FlipCase::Backward;
    r.c3_delta = -(r.k + 1);
  }
  r.dr_delta = -8 * r.c3_delta;
  return r;
}

FlipReport predict_flip(const Tournament& t, Vertex v, Vertex w) {
  check_pair(t, v, w);
  const auto in = in_degrees(t);
  return predict_flip_unchecked(t, in, v, w);
}

TriadCensus flip_triad_census(const Tournament& t, Vertex v, Vertex w) {
  const Tournament after = flip_edge(t, v, w);
  TriadCensus census;
  for (Vertex u = 0; u < t.size(); ++u) {
    if (u == v || u == w) continue;
    const bool before_cyclic = classify_triad(t, u, v, w) == TriadClass::Regular;
    const bool after_cyclic = classify_triad(after, u, v, w) == TriadClass::Regular;
    census.destroyed += before_cyclic && !after_cyclic;
    census.created += !before_cyclic && after_cyclic;
  }
  return census;
}

Tournament cone_extend(const Tournament& t, ConeDirection direction) {
  const std::size_t n = t.size();
  const auto apex = static_cast<Vertex>(n);
  // The apex has the largest index, so its pairs are (i, apex) with bit set iff i -> apex.
  const bool into_apex = direction == ConeDirection::AllIn;
  return Tournament::from_predicate(n + 1, [&](Vertex i, Vertex j) {
    return j == apex ? into_apex : t.beats_unchecked(i, j);
  });
}

IncrementalTracker::IncrementalTracker(Tournament initial)
    : current_(std::move(initial)),
      in_degrees_(tourney::in_degrees(current_)),
      dr_(local_directionality(current_)),
      c3_(c3_from_in_degrees(in_degrees_)) {}

FlipReport IncrementalTracker::apply_flip(Vertex v, Vertex w) {
  check_pair(current_, v, w);
  const FlipReport r = predict_flip_unchecked(current_, in_degrees_, v, w);
  // Forward: v -> w becomes w -> v, so v gains an in-edge and w loses one.
  const std::int64_t step = r.flip_case == FlipCase::Forward ? 1 : -1;
  in_degrees_[v] += step;
  in_degrees_[w] -= step;
  current_.toggle_pair_bit(v < w ? pair_rank(current_.size(), v, w)
                                 : pair_rank(current_.size(), w, v));
  dr_ += r.dr_delta;
  c3_ += r.c3_delta;
  ++flips_applied_;
  return r;
}

}  // namespace tourney
