#include "tourney/trn.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "tourney/errors.hpp"

namespace tourney {

namespace {

// Keeps n(n-1)/2 well inside size_t and the bitstring allocation bounded.
constexpr std::size_t kMaxTrnVertices = std::size_t{1} << 20;

}  // namespace

Tournament parse_trn(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  // A missing second line reads as an empty bitstring, which only n < 2 accepts.
  const std::size_t newline = text.find('\n');
  const std::string_view count_line = text.substr(0, newline);
  const std::string_view bits_line =
      newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
  if (const std::size_t extra = bits_line.find('\n'); extra != std::string_view::npos)
    throw ParseError(3, 1, "unexpected content after the bitstring line");

  if (count_line.empty()) throw ParseError(1, 1, "expected a decimal vertex count");
  for (std::size_t i = 0; i < count_line.size(); ++i)
    if (count_line[i] < '0' || count_line[i] > '9')
      throw ParseError(1, i + 1, std::string("expected a decimal digit, found '") + count_line[i] + "'");
  std::size_t n = 0;
  const auto [end, ec] = std::from_chars(count_line.data(), count_line.data() + count_line.size(), n);
  if (ec != std::errc{} || n > kMaxTrnVertices)
    throw ParseError(1, 1, "vertex count out of range (max " + std::to_string(kMaxTrnVertices) + ")");

  const std::size_t expected = pair_count(n);
  for (std::size_t i = 0; i < bits_line.size(); ++i)
    if (bits_line[i] != '0' && bits_line[i] != '1')
      throw ParseError(2, i + 1, std::string("expected '0' or '1', found '") + bits_line[i] + "'");
  if (bits_line.size() != expected)
    throw ParseError(2, std::min(bits_line.size(), expected) + 1,
                     "expected " + std::to_string(expected) + " bits, found " +
                         std::to_string(bits_line.size()));

  std::size_t rank = 0;
  return Tournament::from_predicate(n, [&](Vertex, Vertex) { return bits_line[rank++] == '1'; });
}

std::string write_trn(const Tournament& t) {
  std::string out = std::to_string(t.size());
  out.push_back('\n');
  out.reserve(out.size() + t.pairs() + 1);
  for (std::size_t r = 0; r < t.pairs(); ++r) out.push_back(t.pair_bit(r) ? '1' : '0');
  out.push_back('\n');
  return out;
}

}  // namespace tourney
