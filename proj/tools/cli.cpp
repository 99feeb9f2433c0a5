#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tourney/enumeration.hpp"
#include "tourney/errors.hpp"
#include "tourney/flip.hpp"
#include "tourney/report.hpp"
#include "tourney/triads.hpp"
#include "tourney/trn.hpp"
#include "tourney/verify.hpp"

namespace tourney::cli {

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

Tournament load(const std::string& path) {
  try {
    return parse_trn(read_input(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// "N,COUNT,SEED"
SampleSpec parse_sample(const std::string& text) {
  std::istringstream in(text);
  SampleSpec s;
  char c1 = 0;
  char c2 = 0;
  if (!(in >> s.n >> c1 >> s.count >> c2 >> s.seed) || c1 != ',' || c2 != ',' || !in.eof())
    throw InputError("--sample expects N,COUNT,SEED, got '" + text + "'");
  return s;
}

struct GenArgs {
  std::string kind;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  Tournament t;
  if (a.kind == "transitive") {
    t = transitive_tournament(a.n);
  } else if (a.kind == "regular") {
    t = rotational_tournament(a.n);
  } else {
    t = random_tournament(a.n, a.seed);
  }
  write_output(a.output, write_trn(t), out);
  return kExitOk;
}

struct AnalyzeArgs {
  std::string file;
  bool json = false;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const AnalyzeReport r = analyze_report(load(a.file));
  out << (a.json ? to_json(r) : to_text(r));
  return r.prop3_holds ? kExitOk : kExitCheckFailed;
}

struct FlipArgs {
  std::string file;
  Vertex v = 0;
  Vertex w = 0;
  bool predict_only = false;
  bool json = false;
  std::string output;
};

// The report goes to `out` unless the flipped tournament does, in which case it
// moves to `err` so standard output stays a clean TRN document.
int cmd_flip(const FlipArgs& a, std::ostream& out, std::ostream& err) {
  const Tournament t = load(a.file);
  const FlipReport r = predict_flip(t, a.v, a.w);
  const std::string report = a.json ? to_json(r) : to_text(r);
  if (a.predict_only) {
    out << report;
    return kExitOk;
  }
  const bool tournament_to_stdout = a.output.empty() || a.output == "-";
  (tournament_to_stdout ? err : out) << report;
  write_output(a.output, write_trn(flip_edge(t, a.v, a.w)), out);
  return kExitOk;
}

struct VerifyArgs {
  std::string prop = "all";
  std::size_t max_n = 6;
  std::string sample;
  unsigned threads = 0;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<Property> props;
  if (a.prop == "all") {
    props.assign(std::begin(kAllProperties), std::end(kAllProperties));
  } else if (auto p = parse_property(a.prop)) {
    props.push_back(*p);
  } else {
    throw InputError("unknown property '" + a.prop + "'");
  }
  std::optional<SampleSpec> sample;
  if (!a.sample.empty()) sample = parse_sample(a.sample);

  bool all_verified = true;
  for (Property p : props) {
    const VerificationReport r = verify_property(p, a.max_n, sample, {a.threads});
    out << (a.json ? to_json(r) : to_text(r));
    all_verified = all_verified && r.verified();
  }
  return all_verified ? kExitOk : kExitCheckFailed;
}

struct BenchArgs {
  std::size_t n = 0;
  std::size_t flips = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> recompute_flips;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  const Tournament start = random_tournament(a.n, a.seed);
  const auto pairs = random_flip_pairs(a.n, a.flips, a.seed);

  IncrementalTracker tracker(start);
  const auto t0 = Clock::now();
  for (const auto& [v, w] : pairs) tracker.apply_flip(v, w);
  const std::chrono::duration<double> tracked = Clock::now() - t0;

  const std::size_t recompute = std::min(a.flips, a.recompute_flips.value_or(a.flips));
  Tournament current = start;
  std::int64_t dr = local_directionality(current);
  std::int64_t c3 = c3_fast(current);
  const auto t1 = Clock::now();
  for (std::size_t i = 0; i < recompute; ++i) {
    current = flip_edge(current, pairs[i].first, pairs[i].second);
    dr = local_directionality(current);
    c3 = c3_fast(current);
  }
  const std::chrono::duration<double> full = Clock::now() - t1;

  const Tournament& final_state = tracker.current();
  bool consistent = tracker.dr() == local_directionality(final_state) &&
                    tracker.c3() == c3_enumerative(final_state) &&
                    std::equal(tracker.in_degrees().begin(), tracker.in_degrees().end(),
                               in_degrees(final_state).begin());
  if (recompute == a.flips)
    consistent = consistent && current == final_state && dr == tracker.dr() && c3 == tracker.c3();

  const auto per_flip_ns = [](std::chrono::duration<double> d, std::size_t count) {
    return count == 0 ? 0.0 : d.count() * 1e9 / static_cast<double>(count);
  };
  const double tracked_ns = per_flip_ns(tracked, a.flips);
  const double full_ns = per_flip_ns(full, recompute);
  out << "n=" << a.n << " flips=" << a.flips << " seed=" << a.seed << "\n"
      << "tracker        " << tracked.count() << " s  (" << tracked_ns << " ns/flip)\n"
      << "recomputation  " << full.count() << " s over " << recompute << " flips  (" << full_ns
      << " ns/flip)\n";
  if (tracked_ns > 0 && recompute > 0) out << "speedup        " << full_ns / tracked_ns << "x\n";
  out << "final dr=" << tracker.dr() << " c3=" << tracker.c3()
      << (consistent ? "  consistent with recomputation\n" : "  MISMATCH against recomputation\n");
  return consistent ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tournament analysis: signed degrees, directionality, cyclic triads, edge flips"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a tournament in TRN format");
  gen_cmd->add_option("--kind", gen.kind, "Tournament family")
      ->required()
      ->check(CLI::IsMember({"transitive", "regular", "random"}));
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--seed", gen.seed, "Seed for --kind random");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default: standard output)");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Degrees, Dr, c3 and the Dr/c3 identity");
  analyze_cmd->add_option("FILE", analyze.file, "TRN file, or - for standard input")->required();
  analyze_cmd->add_flag("--json", analyze.json, "Machine-readable output");

  FlipArgs flip;
  auto* flip_cmd = app.add_subcommand("flip", "Predict and apply the reversal of one edge");
  flip_cmd->add_option("FILE", flip.file, "TRN file, or - for standard input")->required();
  flip_cmd->add_option("V", flip.v, "First endpoint")->required();
  flip_cmd->add_option("W", flip.w, "Second endpoint")->required();
  flip_cmd->add_flag("--predict-only", flip.predict_only, "Print the prediction only");
  flip_cmd->add_flag("--json", flip.json, "Machine-readable report");
  flip_cmd->add_option("-o,--output", flip.output, "Write the flipped tournament here");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive or sampled identity sweeps");
  verify_cmd->add_option("--prop", verify.prop, "1|2|3|cone|composition|fastc3|all")
      ->check(CLI::IsMember({"1", "2", "3", "cone", "composition", "fastc3", "all"}));
  verify_cmd->add_option("--max-n", verify.max_n, "Largest n for exhaustive sweeps")
      ->capture_default_str();
  verify_cmd->add_option("--sample", verify.sample, "N,COUNT,SEED: sample random tournaments");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = all cores)");
  verify_cmd->add_flag("--json", verify.json, "Machine-readable output");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Tracked flips against full recomputation");
  bench_cmd->add_option("--n", bench.n, "Vertex count")->required()->check(CLI::Range(2, 1 << 20));
  bench_cmd->add_option("--flips", bench.flips, "Number of flips")->required();
  bench_cmd->add_option("--seed", bench.seed, "Seed for the tournament and flip sequence")
      ->required();
  bench_cmd->add_option("--recompute-flips", bench.recompute_flips,
                        "Cap the recomputation baseline at this many flips");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*analyze_cmd) return cmd_analyze(analyze, out);
    if (*flip_cmd) return cmd_flip(flip, out, err);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace tourney::cli
