#include "tourney/verify.hpp"

#include <algorithm>
#include <atomic>
#include <iterator>
#include <mutex>
#include <sstream>
#include <thread>

#include "tourney/enumeration.hpp"
#include "tourney/errors.hpp"
#include "tourney/triads.hpp"

namespace tourney {

std::string_view to_string(Property p) noexcept {
  switch (p) {
    case Property::Prop1: return "Prop1";
    case Property::Prop2: return "Prop2";
    case Property::Prop3: return "Prop3";
    case Property::ConeCase: return "ConeCase";
    case Property::FlipComposition: return "FlipComposition";
    case Property::FastC3Agreement: return "FastC3Agreement";
  }
  return "?";
}

std::optional<Property> parse_property(std::string_view text) {
  if (text == "1") return Property::Prop1;
  if (text == "2") return Property::Prop2;
  if (text == "3") return Property::Prop3;
  if (text == "cone") return Property::ConeCase;
  if (text == "composition") return Property::FlipComposition;
  if (text == "fastc3") return Property::FastC3Agreement;
  for (Property p : kAllProperties)
    if (text == to_string(p)) return p;
  return std::nullopt;
}

std::uint64_t instances_per_tournament(Property p, std::size_t n) {
  switch (p) {
    case Property::Prop1:
    case Property::Prop2: return n * (n < 1 ? 0 : n - 1);
    case Property::ConeCase: return 2;
    case Property::FlipComposition: return n;
    case Property::Prop3:
    case Property::FastC3Agreement: return 1;
  }
  return 0;
}

std::uint64_t exhaustive_cardinality(Property p, std::size_t n_max) {
  std::uint64_t total = 0;
  for (std::size_t n = 0; n <= n_max; ++n) total += labeled_count(n) * instances_per_tournament(p, n);
  return total;
}

namespace {

struct DetailWriter {
  std::ostream& os;
  void operator()(std::monostate) const {}
  void operator()(const FlipPairDetail& d) const { os << " flip (" << d.v << ", " << d.w << ")"; }
  void operator()(ConeDirection d) const { os << " cone " << to_string(d); }
  void operator()(const BaseVertexDetail& d) const { os << " base vertex " << d.v; }
  void operator()(const BinomialDetail& d) const { os << " binomial identity at m = " << d.m; }
};

bool counterexample_less(const Counterexample& a, const Counterexample& b) {
  if (a.instance != b.instance) return a.instance < b.instance;
  if (a.detail != b.detail) return a.detail < b.detail;
  return a.check < b.check;
}

class Recorder {
 public:
  explicit Recorder(VerificationReport& report) : report_(report) {}

  void expect_eq(const InstanceId& id, CounterexampleDetail detail, std::string_view check,
                 std::int64_t expected, std::int64_t actual) {
    if (expected == actual) return;
    ++report_.counterexample_total;
    if (report_.counterexamples.size() < VerificationReport::kMaxStored)
      report_.counterexamples.push_back({id, detail, std::string(check), expected, actual});
  }

 private:
  VerificationReport& report_;
};

void check_binomial_preamble(Recorder& rec) {
  for (std::int64_t m = 0; m <= 50; ++m) {
    const std::int64_t lhs = 2 * (choose(m + 2, 3) - choose(m + 1, 3));
    rec.expect_eq({}, BinomialDetail{m}, "2[C(m+2,3)-C(m+1,3)] = 2C(m+1,2)", 2 * choose(m + 1, 2),
                  lhs);
    rec.expect_eq({}, BinomialDetail{m}, "2[C(m+2,3)-C(m+1,3)] = m^2+m", m * m + m, lhs);
  }
}

// `sampled` switches Prop3's c3 source to c3_fast with an enumerative cross-check
// on every hundredth instance.
void check_tournament(Property p, const Tournament& t, const InstanceId& id, std::uint64_t ordinal,
                      bool sampled, Recorder& rec) {
  const auto n = static_cast<Vertex>(t.size());
  const std::int64_t dr = local_directionality(t);
  switch (p) {
    case Property::Prop1:
      for (Vertex v = 0; v < n; ++v)
        for (Vertex w = 0; w < n; ++w) {
          if (v == w) continue;
          const FlipReport r = predict_flip(t, v, w);
          const std::int64_t actual = local_directionality(flip_edge(t, v, w)) - dr;
          rec.expect_eq(id, FlipPairDetail{v, w}, "dr_delta", r.dr_delta, actual);
          rec.expect_eq(id, FlipPairDetail{v, w}, "dr_delta swapped framing", r.dr_delta,
                        predict_flip(t, w, v).dr_delta);
        }
      break;
    case Property::Prop2: {
      const std::int64_t c3 = c3_enumerative(t);
      for (Vertex v = 0; v < n; ++v)
        for (Vertex w = 0; w < n; ++w) {
          if (v == w) continue;
          const FlipReport r = predict_flip(t, v, w);
          const std::int64_t actual = c3_enumerative(flip_edge(t, v, w)) - c3;
          rec.expect_eq(id, FlipPairDetail{v, w}, "c3_delta", r.c3_delta, actual);
          rec.expect_eq(id, FlipPairDetail{v, w}, "c3_delta swapped framing", r.c3_delta,
                        predict_flip(t, w, v).c3_delta);
          const TriadCensus census = flip_triad_census(t, v, w);
          rec.expect_eq(id, FlipPairDetail{v, w}, "census created - destroyed", r.c3_delta,
                        census.created - census.destroyed);
        }
      break;
    }
    case Property::Prop3: {
      std::int64_t c3 = 0;
      if (sampled) {
        c3 = c3_fast(t);
        if (ordinal % 100 == 0) rec.expect_eq(id, {}, "c3_fast vs c3_enumerative", c3_enumerative(t), c3);
      } else {
        c3 = c3_enumerative(t);
      }
      rec.expect_eq(id, {}, "Dr = 2C(n+1,3) - 8c3", max_directionality(n) - 8 * c3, dr);
      break;
    }
    case Property::ConeCase: {
      const std::int64_t c3 = c3_enumerative(t);
      const std::int64_t nn = n;
      for (ConeDirection d : {ConeDirection::AllOut, ConeDirection::AllIn}) {
        const Tournament cone = cone_extend(t, d);
        rec.expect_eq(id, d, "cone c3 delta", 0, c3_enumerative(cone) - c3);
        rec.expect_eq(id, d, "cone dr delta", nn * nn + nn, local_directionality(cone) - dr);
      }
      break;
    }
    case Property::FlipComposition: {
      const std::int64_t c3 = c3_enumerative(t);
      for (Vertex base = 0; base < n; ++base) {
        const Tournament rho = Tournament::from_predicate(n, [&](Vertex i, Vertex j) {
          if (i == base) return true;
          if (j == base) return false;
          return t.beats_unchecked(i, j);
        });
        const std::int64_t rho_dr = local_directionality(rho);
        const std::int64_t rho_c3 = c3_enumerative(rho);
        IncrementalTracker tracker(rho);
        for (Vertex u = 0; u < n; ++u)
          if (u != base && t.beats_unchecked(u, base)) tracker.apply_flip(base, u);
        const BaseVertexDetail detail{base};
        rec.expect_eq(id, detail, "rebuilt tournament matches", 1, tracker.current() == t ? 1 : 0);
        rec.expect_eq(id, detail, "Dr(tau) = Dr(rho) - 8K", rho_dr - 8 * (c3 - rho_c3), dr);
        rec.expect_eq(id, detail, "tracked K", c3 - rho_c3, tracker.c3() - rho_c3);
        rec.expect_eq(id, detail, "tracked Dr", dr, tracker.dr());
      }
      break;
    }
    case Property::FastC3Agreement:
      rec.expect_eq(id, {}, "c3_fast vs c3_enumerative", c3_enumerative(t), c3_fast(t));
      break;
  }
}

struct Chunk {
  std::size_t n;
  std::uint64_t first;
  std::uint64_t last;
};

constexpr std::uint64_t kChunkSize = 2048;

}  // namespace

std::string describe(const Counterexample& c) {
  std::ostringstream os;
  os << "n=" << c.instance.n << (c.instance.is_seed ? " seed=" : " code=") << c.instance.id;
  std::visit(DetailWriter{os}, c.detail);
  os << ": " << c.check << " expected " << c.expected << ", got " << c.actual;
  return os.str();
}

void merge(VerificationReport& into, VerificationReport part) {
  into.instances_checked += part.instances_checked;
  into.counterexample_total += part.counterexample_total;
  into.counterexamples.insert(into.counterexamples.end(),
                              std::make_move_iterator(part.counterexamples.begin()),
                              std::make_move_iterator(part.counterexamples.end()));
  std::sort(into.counterexamples.begin(), into.counterexamples.end(), counterexample_less);
  if (into.counterexamples.size() > VerificationReport::kMaxStored)
    into.counterexamples.resize(VerificationReport::kMaxStored);
}

VerificationReport verify_property(Property property, std::size_t n_max,
                                   std::optional<SampleSpec> sample, VerifyOptions options) {
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.property = property;
  report.sampled = sample.has_value();
  report.n_min = sample ? sample->n : 0;
  report.n_max = sample ? sample->n : n_max;

  if (!sample && n_max > kMaxExhaustiveN)
    throw InputError("exhaustive verification supports n <= " + std::to_string(kMaxExhaustiveN) +
                     ", got " + std::to_string(n_max));

  // Work is split into chunks of at most kChunkSize consecutive codes (or sample
  // ordinals) that never straddle two vertex counts.
  std::vector<std::pair<std::size_t, std::uint64_t>> first_chunk_of_n;  // (n, first chunk index)
  std::uint64_t chunk_count = 0;
  if (sample) {
    chunk_count = (sample->count + kChunkSize - 1) / kChunkSize;
  } else {
    for (std::size_t n = 0; n <= n_max; ++n) {
      first_chunk_of_n.emplace_back(n, chunk_count);
      chunk_count += (labeled_count(n) + kChunkSize - 1) / kChunkSize;
    }
  }
  const auto chunk_at = [&](std::uint64_t index) -> Chunk {
    if (sample)
      return {sample->n, index * kChunkSize, std::min(sample->count, (index + 1) * kChunkSize)};
    auto it = std::upper_bound(first_chunk_of_n.begin(), first_chunk_of_n.end(), index,
                               [](std::uint64_t i, const auto& entry) { return i < entry.second; });
    const auto& [n, first] = *std::prev(it);
    const std::uint64_t offset = (index - first) * kChunkSize;
    return {n, offset, std::min(labeled_count(n), offset + kChunkSize)};
  };

  if (property == Property::Prop3 || property == Property::ConeCase) {
    Recorder rec(report);
    check_binomial_preamble(rec);
  }

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, chunk_count)));

  std::atomic<std::uint64_t> next{0};
  std::mutex merge_mutex;
  auto worker = [&] {
    VerificationReport local;
    Recorder rec(local);
    for (std::uint64_t i = next++; i < chunk_count; i = next++) {
      const Chunk c = chunk_at(i);
      for (std::uint64_t k = c.first; k < c.last; ++k) {
        const bool sampled = sample.has_value();
        const InstanceId id{c.n, sampled ? sample->seed + k : k, sampled};
        const Tournament t = sampled ? random_tournament(c.n, id.id) : Tournament::from_code(c.n, k);
        check_tournament(property, t, id, k, sampled, rec);
        local.instances_checked += instances_per_tournament(property, c.n);
      }
    }
    std::lock_guard lock(merge_mutex);
    merge(report, std::move(local));
  };

  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();

  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace tourney
