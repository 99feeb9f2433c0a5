// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Every check is exact; the only thresholds are the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tourney/enumeration.hpp"
#include "tourney/flip.hpp"
#include "tourney/triads.hpp"
#include "tourney/trn.hpp"
#include "tourney/verify.hpp"

namespace {

using namespace tourney;
using Clock = std::chrono::steady_clock;

constexpr double kSweepSecondsLimit = 10.0;
constexpr double kTrackedFlipSecondsLimit = 5.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string first_failures(const VerificationReport& r) {
  std::string out;
  for (std::size_t i = 0; i < r.counterexamples.size() && i < 3; ++i)
    out += "; " + describe(r.counterexamples[i]);
  return out;
}

Outcome criterion_prop3() {
  const auto start = Clock::now();
  const VerificationReport r = verify_property(Property::Prop3, 6);
  const double secs = seconds_since(start);
  const std::uint64_t expected = exhaustive_cardinality(Property::Prop3, 6);
  std::ostringstream os;
  os << r.instances_checked << " tournaments n=0..6 (closed form " << expected << "), "
     << r.counterexample_total << " counterexamples, " << secs << " s" << first_failures(r);
  return {r.verified() && r.instances_checked == expected && secs < kSweepSecondsLimit, os.str()};
}

Outcome criterion_flip_deltas() {
  const auto start = Clock::now();
  const VerificationReport p1 = verify_property(Property::Prop1, 5);
  const VerificationReport p2 = verify_property(Property::Prop2, 5);
  const double secs = seconds_since(start);
  const std::uint64_t expected = exhaustive_cardinality(Property::Prop1, 5);
  std::ostringstream os;
  os << "dr: " << p1.instances_checked << " ordered-pair flips, " << p1.counterexample_total
     << " counterexamples; c3: " << p2.instances_checked << " flips, " << p2.counterexample_total
     << " counterexamples (n=5 alone: " << 1024 * 20 << "); " << secs << " s"
     << first_failures(p1) << first_failures(p2);
  return {p1.verified() && p2.verified() && p1.instances_checked == expected &&
              p2.instances_checked == expected && secs < kSweepSecondsLimit,
          os.str()};
}

Outcome criterion_census() {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  for (std::size_t n = 0; n <= 5; ++n)
    for (const Tournament& t : enumerate_all(n))
      for (Vertex v = 0; v < n; ++v)
        for (Vertex w = 0; w < n; ++w) {
          if (v == w) continue;
          const TriadCensus c = flip_triad_census(t, v, w);
          failures += c.created - c.destroyed != predict_flip(t, v, w).c3_delta;
          ++checks;
        }
  std::ostringstream os;
  os << checks << " flips, " << failures << " counterexamples";
  return {failures == 0 && checks == exhaustive_cardinality(Property::Prop2, 5), os.str()};
}

Outcome criterion_cone() {
  const VerificationReport r = verify_property(Property::ConeCase, 5);
  // Binomial identity exactly as the criterion states it.
  std::int64_t mismatches = 0;
  std::int64_t first_bad = -1;
  std::int64_t holds_as_n_squared_plus_n = 0;
  for (std::int64_t n = 0; n <= 50; ++n) {
    const std::int64_t lhs = 2 * (oracle::binomial(n + 2, 3) - oracle::binomial(n + 1, 3));
    if (lhs != (n + 1) * (n + 2)) {
      ++mismatches;
      if (first_bad < 0) first_bad = n;
    }
    holds_as_n_squared_plus_n += lhs == n * n + n;
  }
  std::ostringstream os;
  os << "cone sweep: " << r.instances_checked << " (tournament, direction) checks, "
     << r.counterexample_total << " counterexamples" << first_failures(r)
     << "; 2[C(n+2,3)-C(n+1,3)] = (n+1)(n+2) fails for " << mismatches << " of 51 n";
  if (first_bad >= 0)
    os << " (first n=" << first_bad << ": lhs "
       << 2 * (oracle::binomial(first_bad + 2, 3) - oracle::binomial(first_bad + 1, 3))
       << " vs " << (first_bad + 1) * (first_bad + 2) << ")";
  os << "; lhs = n^2+n holds for " << holds_as_n_squared_plus_n << " of 51 n";
  return {r.verified() && mismatches == 0, os.str()};
}

Outcome criterion_composition() {
  const VerificationReport r = verify_property(Property::FlipComposition, 5);
  std::ostringstream os;
  os << r.instances_checked << " (tournament, base vertex) rebuilds, " << r.counterexample_total
     << " counterexamples" << first_failures(r);
  return {r.verified() && r.instances_checked == exhaustive_cardinality(Property::FlipComposition, 5),
          os.str()};
}

Outcome criterion_named_values() {
  std::ostringstream os;
  bool ok = true;
  auto expect = [&](const char* what, const Tournament& t, std::int64_t dr, std::int64_t c3) {
    const std::int64_t got_dr = local_directionality(t);
    const std::int64_t got_c3 = c3_enumerative(t);
    if (got_dr != dr || got_c3 != c3) {
      ok = false;
      os << what << ": got (Dr " << got_dr << ", c3 " << got_c3 << ") want (" << dr << ", " << c3
         << "); ";
    }
  };
  expect("transitive(3)", transitive_tournament(3), 8, 0);
  expect("cyclic(3)", rotational_tournament(3), 0, 1);
  expect("rotational(5)", rotational_tournament(5), 0, 5);
  for (std::int64_t n = 0; n <= 12; ++n)
    expect("transitive(n)", transitive_tournament(static_cast<std::size_t>(n)),
           2 * oracle::binomial(n + 1, 3), 0);
  if (ok) os << "transitive(3) (8,0), cyclic(3) (0,1), rotational(5) (0,5), transitive(0..12) (2C(n+1,3),0)";
  return {ok, os.str()};
}

Outcome criterion_tracker() {
  IncrementalTracker tracker(random_tournament(50, 1));
  const auto pairs = random_flip_pairs(50, 10000, 1);
  std::uint64_t checkpoints = 0;
  std::uint64_t mismatches = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    tracker.apply_flip(pairs[i].first, pairs[i].second);
    if ((i + 1) % 100 != 0 && i + 1 != pairs.size()) continue;
    ++checkpoints;
    const Tournament& t = tracker.current();
    const auto in = in_degrees(t);
    mismatches += tracker.dr() != local_directionality(t) || tracker.c3() != c3_enumerative(t) ||
                  !std::equal(in.begin(), in.end(), tracker.in_degrees().begin());
  }
  std::ostringstream os;
  os << pairs.size() << " flips, " << checkpoints << " checkpoints, " << mismatches
     << " mismatches; final Dr " << tracker.dr() << ", c3 " << tracker.c3();
  return {mismatches == 0 && checkpoints == 100, os.str()};
}

Outcome criterion_fast_c3() {
  const VerificationReport exhaustive = verify_property(Property::FastC3Agreement, 6);
  const VerificationReport sampled =
      verify_property(Property::FastC3Agreement, 0, SampleSpec{40, 1000, 1});
  std::ostringstream os;
  os << exhaustive.instances_checked << " tournaments n<=6, " << sampled.instances_checked
     << " random n=40; " << exhaustive.counterexample_total + sampled.counterexample_total
     << " counterexamples" << first_failures(exhaustive) << first_failures(sampled);
  return {exhaustive.verified() && sampled.verified() && sampled.instances_checked == 1000,
          os.str()};
}

Outcome criterion_format() {
  std::mt19937_64 rng(20240917);
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = rng() % 65;
    const Tournament t = random_tournament(n, rng());
    const std::string text = write_trn(t);
    failures += !(parse_trn(text) == t && write_trn(parse_trn(text)) == text);
  }
  const Tournament transitive = parse_trn("3\n111");
  const Tournament cyclic = parse_trn("3\n110");
  const bool worked = transitive == transitive_tournament(3) && cyclic.beats(0, 1) &&
                      cyclic.beats(1, 2) && cyclic.beats(2, 0);
  std::ostringstream os;
  os << "1000 round trips (n in 0..64), " << failures << " failures; worked encodings "
     << (worked ? "ok" : "WRONG");
  if (!worked)
    os << " (\"3\\n110\" decodes to c3=" << c3_enumerative(cyclic)
       << " under lexicographic pair order; the cyclic triangle is \"3\\n101\")";
  return {failures == 0 && worked, os.str()};
}

Outcome criterion_performance() {
  const Tournament start = random_tournament(200, 1);
  const auto pairs = random_flip_pairs(200, 1'000'000, 1);
  IncrementalTracker tracker(start);
  const auto t0 = Clock::now();
  for (const auto& [v, w] : pairs) tracker.apply_flip(v, w);
  const double tracked = seconds_since(t0);

  // Full recomputation baseline over a prefix, reported per step.
  constexpr std::size_t kBaselineSteps = 1000;
  Tournament current = start;
  const auto t1 = Clock::now();
  for (std::size_t i = 0; i < kBaselineSteps; ++i) {
    current = flip_edge(current, pairs[i].first, pairs[i].second);
    local_directionality(current);
    c3_fast(current);
  }
  const double baseline_per_step = seconds_since(t1) / kBaselineSteps;

  const bool consistent = tracker.dr() == local_directionality(tracker.current()) &&
                          tracker.c3() == c3_enumerative(tracker.current());
  std::ostringstream os;
  os << "1e6 tracked flips at n=200 in " << tracked << " s (" << tracked * 1e3 << " ns/flip); "
     << "full recomputation " << baseline_per_step * 1e9 << " ns/step"
     << (consistent ? "" : "; tracker MISMATCH");
  return {consistent && tracked < kTrackedFlipSecondsLimit, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"C1  Dr = 2C(n+1,3) - 8c3, all tournaments n<=6", criterion_prop3},
      {"C2  flip deltas exact, all ordered pairs n<=5", criterion_flip_deltas},
      {"C3  triad census created - destroyed = c3_delta", criterion_census},
      {"C4  cone case and binomial step identity", criterion_cone},
      {"C5  flip composition from all-out base", criterion_composition},
      {"C6  named values", criterion_named_values},
      {"C7  tracker equivalence, random(50,1), 10000 flips", criterion_tracker},
      {"C8  c3_fast = c3_enumerative", criterion_fast_c3},
      {"C9  TRN round trip and worked encodings", criterion_format},
      {"C10 1e6 tracked flips at n=200 under 5 s", criterion_performance},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const Outcome o = run();
    failed += !o.pass;
    std::printf("[%s] %s\n       %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
