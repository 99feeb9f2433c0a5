#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tourney/flip.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// Identities the verification engine sweeps.
///
///   Prop1           Dr(flip) - Dr = predicted dr_delta, every ordered pair.
///   Prop2           c3(flip) - c3 = predicted c3_delta and created - destroyed = c3_delta.
///   Prop3           Dr = 2 C(n+1,3) - 8 c3.
///   ConeCase        cone extension keeps c3 and adds n^2 + n to Dr, both directions.
///   FlipComposition Dr(tau) = Dr(rho) - 8 (c3(tau) - c3(rho)) where rho is tau with
///                   every edge at a base vertex turned outward, rebuilt flip by flip.
///   FastC3Agreement c3_fast = c3_enumerative.
enum class Property { Prop1, Prop2, Prop3, ConeCase, FlipComposition, FastC3Agreement };

inline constexpr Property kAllProperties[] = {Property::Prop1,           Property::Prop2,
                                              Property::Prop3,           Property::ConeCase,
                                              Property::FlipComposition, Property::FastC3Agreement};

std::string_view to_string(Property p) noexcept;

/// Accepts the CLI spellings 1, 2, 3, cone, composition, fastc3 as well as the enum names.
std::optional<Property> parse_property(std::string_view text);

/// Instances checked per tournament on n vertices: n(n-1) for the flip
/// properties, 2 for ConeCase, n for FlipComposition, 1 otherwise.
std::uint64_t instances_per_tournament(Property p, std::size_t n);

/// Exhaustive sweep size over all labeled tournaments with 0 <= n <= n_max.
std::uint64_t exhaustive_cardinality(Property p, std::size_t n_max);

/// A failing instance. `id` is the enumeration code for exhaustive sweeps and the
/// random_tournament seed for sampled ones.
struct InstanceId {
  std::size_t n = 0;
  std::uint64_t id = 0;
  bool is_seed = false;

  friend auto operator<=>(const InstanceId&, const InstanceId&) = default;
};

struct FlipPairDetail {
  Vertex v = 0;
  Vertex w = 0;
  friend auto operator<=>(const FlipPairDetail&, const FlipPairDetail&) = default;
};

struct BaseVertexDetail {
  Vertex v = 0;
  friend auto operator<=>(const BaseVertexDetail&, const BaseVertexDetail&) = default;
};

/// A binomial identity checked in a sweep preamble, at argument m.
struct BinomialDetail {
  std::int64_t m = 0;
  friend auto operator<=>(const BinomialDetail&, const BinomialDetail&) = default;
};

using CounterexampleDetail =
    std::variant<std::monostate, FlipPairDetail, ConeDirection, BaseVertexDetail, BinomialDetail>;

struct Counterexample {
  InstanceId instance;
  CounterexampleDetail detail;
  std::string check;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
};

std::string describe(const Counterexample& c);

struct SampleSpec {
  std::size_t n = 0;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};

struct VerificationReport {
  /// Stored counterexamples are capped; `counterexample_total` is not.
  static constexpr std::size_t kMaxStored = 1000;

  Property property = Property::Prop3;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  bool sampled = false;
  std::uint64_t instances_checked = 0;
  std::uint64_t counterexample_total = 0;
  std::vector<Counterexample> counterexamples;  // sorted by instance, then detail
  std::chrono::nanoseconds elapsed{0};

  bool verified() const noexcept { return counterexample_total == 0; }
};

/// Folds `part` into `into`. Associative and commutative on counts and on the
/// sorted counterexample list.
void merge(VerificationReport& into, VerificationReport part);

struct VerifyOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Largest n_max for exhaustive verification; n = 7 alone is 2^21 tournaments.
inline constexpr std::size_t kMaxExhaustiveN = 7;

/// Exhaustive mode (no sample): every labeled tournament with n <= n_max.
/// Sampled mode: `count` tournaments random_tournament(n, seed + i); n_max is ignored.
/// Prop3 and ConeCase also assert 2 [C(m+2,3) - C(m+1,3)] = m^2 + m for m <= 50.
/// Throws InputError when an exhaustive n_max exceeds kMaxExhaustiveN.
VerificationReport verify_property(Property property, std::size_t n_max,
                                   std::optional<SampleSpec> sample = std::nullopt,
                                   VerifyOptions options = {});

}  // namespace tourney
