#include "tourney/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "tourney/triads.hpp"

namespace tourney {

AnalyzeReport analyze_report(const Tournament& t) {
  DegreeSummary degrees = degree_summary(t);
  AnalyzeReport r;
  r.n = static_cast<std::int64_t>(t.size());
  r.in_degrees = std::move(degrees.in_degrees);
  r.out_degrees = std::move(degrees.out_degrees);
  r.signed_degrees = std::move(degrees.signed_degrees);
  r.dr = local_directionality(t);
  r.c3 = c3_enumerative(t);
  r.c3_fast = c3_fast(t);
  r.prop3_holds = r.dr == max_directionality(r.n) - 8 * r.c3;
  r.is_transitive = is_transitive(t);
  r.is_regular = is_regular(t);
  return r;
}

namespace {

using nlohmann::ordered_json;

ordered_json counterexample_json(const Counterexample& c) {
  ordered_json j;
  j["n"] = c.instance.n;
  j[c.instance.is_seed ? "seed" : "code"] = c.instance.id;
  std::visit(
      [&j](const auto& d) {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, FlipPairDetail>) {
          j["detail"] = {{"flip", {d.v, d.w}}};
        } else if constexpr (std::is_same_v<D, ConeDirection>) {
          j["detail"] = {{"cone", to_string(d)}};
        } else if constexpr (std::is_same_v<D, BaseVertexDetail>) {
          j["detail"] = {{"base_vertex", d.v}};
        } else if constexpr (std::is_same_v<D, BinomialDetail>) {
          j["detail"] = {{"binomial_m", d.m}};
        } else {
          j["detail"] = nullptr;
        }
      },
      c.detail);
  j["check"] = c.check;
  j["expected"] = c.expected;
  j["actual"] = c.actual;
  return j;
}

double milliseconds(std::chrono::nanoseconds d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

}  // namespace

std::string to_json(const AnalyzeReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["in_degrees"] = r.in_degrees;
  j["out_degrees"] = r.out_degrees;
  j["signed_degrees"] = r.signed_degrees;
  j["dr"] = r.dr;
  j["c3"] = r.c3;
  j["c3_fast"] = r.c3_fast;
  j["prop3_holds"] = r.prop3_holds;
  j["is_transitive"] = r.is_transitive;
  j["is_regular"] = r.is_regular;
  return j.dump(2) + "\n";
}

std::string to_json(const FlipReport& r) {
  ordered_json j;
  j["v"] = r.v;
  j["w"] = r.w;
  j["case"] = to_string(r.flip_case);
  j["k"] = r.k;
  j["dr_delta"] = r.dr_delta;
  j["c3_delta"] = r.c3_delta;
  j["hypothesis_satisfied"] = r.hypothesis_satisfied;
  return j.dump(2) + "\n";
}

std::string to_json(const VerificationReport& r) {
  ordered_json j;
  j["property"] = to_string(r.property);
  j["mode"] = r.sampled ? "sampled" : "exhaustive";
  j["n_range"] = {r.n_min, r.n_max};
  j["instances_checked"] = r.instances_checked;
  j["counterexample_total"] = r.counterexample_total;
  j["counterexamples"] = ordered_json::array();
  for (const Counterexample& c : r.counterexamples) j["counterexamples"].push_back(counterexample_json(c));
  j["elapsed_ms"] = milliseconds(r.elapsed);
  j["verified"] = r.verified();
  return j.dump(2) + "\n";
}

std::string to_text(const AnalyzeReport& r) {
  std::ostringstream os;
  os << "n               " << r.n << "\n"
     << "dr              " << r.dr << "\n"
     << "c3              " << r.c3 << "\n"
     << "c3_fast         " << r.c3_fast << "\n"
     << "prop3_holds     " << std::boolalpha << r.prop3_holds << "\n"
     << "is_transitive   " << r.is_transitive << "\n"
     << "is_regular      " << r.is_regular << "\n\n"
     << std::setw(8) << "vertex" << std::setw(8) << "in" << std::setw(8) << "out" << std::setw(8)
     << "signed" << "\n";
  for (std::size_t v = 0; v < r.in_degrees.size(); ++v)
    os << std::setw(8) << v << std::setw(8) << r.in_degrees[v] << std::setw(8) << r.out_degrees[v]
       << std::setw(8) << r.signed_degrees[v] << "\n";
  return os.str();
}

std::string to_text(const FlipReport& r) {
  std::ostringstream os;
  os << "v                    " << r.v << "\n"
     << "w                    " << r.w << "\n"
     << "case                 " << to_string(r.flip_case) << "\n"
     << "k                    " << r.k << "\n"
     << "dr_delta             " << r.dr_delta << "\n"
     << "c3_delta             " << r.c3_delta << "\n"
     << "hypothesis_satisfied " << std::boolalpha << r.hypothesis_satisfied << "\n";
  return os.str();
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.verified() ? "VERIFIED " : "FAILED   ") << std::left << std::setw(16)
     << to_string(r.property) << std::right << (r.sampled ? " sampled    n=" : " exhaustive n=")
     << r.n_min << ".." << r.n_max << "  instances=" << r.instances_checked
     << "  counterexamples=" << r.counterexample_total << "  elapsed=" << std::fixed
     << std::setprecision(1) << milliseconds(r.elapsed) << "ms\n";
  for (const Counterexample& c : r.counterexamples) os << "  " << describe(c) << "\n";
  return os.str();
}

}  // namespace tourney
