#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tourney/flip.hpp"
#include "tourney/tournament.hpp"
#include "tourney/verify.hpp"

namespace tourney {

/// Everything `analyze` prints about one tournament.
struct AnalyzeReport {
  std::int64_t n = 0;
  std::vector<std::int64_t> in_degrees;
  std::vector<std::int64_t> out_degrees;
  std::vector<std::int64_t> signed_degrees;
  std::int64_t dr = 0;
  std::int64_t c3 = 0;       // enumerative
  std::int64_t c3_fast = 0;
  bool prop3_holds = false;  // dr == 2 C(n+1,3) - 8 c3
  bool is_transitive = false;
  bool is_regular = false;
};

AnalyzeReport analyze_report(const Tournament& t);

// JSON documents use the struct field names as keys; "case" for FlipReport::flip_case.
std::string to_json(const AnalyzeReport& r);
std::string to_json(const FlipReport& r);
std::string to_json(const VerificationReport& r);

std::string to_text(const AnalyzeReport& r);
std::string to_text(const FlipReport& r);
std::string to_text(const VerificationReport& r);

}  // namespace tourney
