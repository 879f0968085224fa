#ifndef TURAN_GRAPH6_HPP
#define TURAN_GRAPH6_HPP

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct Graph6Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Largest vertex count accepted by the decoder. The format itself reaches
/// 2^36 - 1; anything past this would not fit a dense bit-row graph anyway.
inline constexpr std::int64_t kGraph6MaxVertices = 1 << 20;

namespace detail {

inline void append_graph6_size(std::string& out, std::int64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace detail

/// Standard graph6: size header, then the upper triangle in column order
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, +63.
inline std::string graph6_encode(const Graph& g) {
  const std::int64_t n = g.size();
  std::string out;
  detail::append_graph6_size(out, n);
  int value = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + 63));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
  return out;
}

inline Graph graph6_decode(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty string");
  for (char c : text)
    if (c < 63 || c > 126) throw Graph6Error("graph6: byte outside 63..126");

  std::size_t pos = 0;
  auto chunk = [&](std::size_t count) {
    if (pos + count > text.size()) throw Graph6Error("graph6: truncated size header");
    std::int64_t v = 0;
    for (std::size_t i = 0; i < count; ++i) v = (v << 6) | (text[pos++] - 63);
    return v;
  };
  std::int64_t n = 0;
  if (text[0] != '~') {
    n = chunk(1);
  } else if (text.size() > 1 && text[1] == '~') {
    pos = 2;
    n = chunk(6);
  } else {
    pos = 1;
    n = chunk(3);
  }
  if (n > kGraph6MaxVertices) throw Graph6Error("graph6: unsupported vertex count " + std::to_string(n));

  const std::int64_t bits = n * (n - 1) / 2;
  const std::int64_t bytes = (bits + 5) / 6;
  if (static_cast<std::int64_t>(text.size() - pos) != bytes)
    throw Graph6Error("graph6: expected " + std::to_string(bytes) + " data bytes, found " +
                      std::to_string(text.size() - pos));

  Graph g(static_cast<int>(n));
  std::int64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6) {
    const int last = text.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw Graph6Error("graph6: nonzero padding bits");
  }
  return g;
}

/// One graph6 string per line; blank lines are skipped.
inline std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(graph6_decode(line));
  }
  return out;
}

inline void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const auto& g : graphs) out << graph6_encode(g) << '\n';
}

}  // namespace turan

#endif  // TURAN_GRAPH6_HPP
