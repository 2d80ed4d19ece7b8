#include "domchrom/graph6.hpp"

#include <vector>

namespace domchrom {
namespace {

constexpr int kBias = 63;
constexpr char kLongForm = 126;

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto take = [&](std::size_t at) -> int {
    if (at >= text.size()) throw Graph6Error("truncated graph6 string", at);
    const char c = text[at];
    if (!printable(c)) throw Graph6Error("character out of range 63..126", at);
    return c - kBias;
  };

  if (pos >= text.size()) throw Graph6Error("empty graph6 string", pos);
  long long n = 0;
  if (text[pos] != kLongForm) {
    n = take(pos);
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] != kLongForm) {
    for (int i = 1; i <= 3; ++i) n = (n << 6) | take(pos + static_cast<std::size_t>(i));
    if (n < 63) throw Graph6Error("malformed length prefix: long form for n < 63", pos);
    pos += 4;
  } else {
    for (int i = 2; i <= 7; ++i) n = (n << 6) | take(pos + static_cast<std::size_t>(i));
    if (n < 258048) throw Graph6Error("malformed length prefix: 8-byte form for n < 258048", pos);
    pos += 8;
  }
  if (n > (1 << 20)) throw Graph6Error("graph6 order too large", pos);

  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t body = (pairs + 5) / 6;
  if (text.size() - pos != body) {
    throw Graph6Error("expected " + std::to_string(body) + " data bytes, found " +
                          std::to_string(text.size() - pos),
                      pos);
  }

  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = take(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int chunk = take(last);
    if (chunk & ((1 << (6 - k % 6)) - 1)) throw Graph6Error("nonzero padding bits", last);
  }
  for (std::size_t b = pos; b < text.size(); ++b) take(b);
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n < 258048) {
    out.push_back(kLongForm);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out.push_back(kLongForm);
    out.push_back(kLongForm);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

}  // namespace domchrom
