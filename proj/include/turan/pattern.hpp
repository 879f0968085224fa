#ifndef TURAN_PATTERN_HPP
#define TURAN_PATTERN_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "turan/counting.hpp"
#include "turan/graph.hpp"

namespace turan {

/// Target shapes: the cycle C_k (k vertices) or the path P_k (k edges).
struct Pattern {
  enum class Kind { cycle, path };
  Kind kind = Kind::cycle;
  int length = 3;

  static Pattern cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle pattern needs k >= 3");
    return {Kind::cycle, k};
  }
  static Pattern path(int k) {
    if (k < 1) throw std::invalid_argument("path pattern needs k >= 1");
    return {Kind::path, k};
  }

  /// "C5", "P3" (case-insensitive prefix).
  static Pattern parse(std::string_view text) {
    if (text.size() < 2) throw std::invalid_argument("bad pattern '" + std::string(text) + "'");
    int k = 0;
    for (char c : text.substr(1)) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad pattern '" + std::string(text) + "'");
      k = k * 10 + (c - '0');
      if (k > 1000000) throw std::invalid_argument("pattern length too large");
    }
    switch (text[0]) {
      case 'C':
      case 'c':
        return cycle(k);
      case 'P':
      case 'p':
        return path(k);
      default:
        throw std::invalid_argument("bad pattern '" + std::string(text) + "'");
    }
  }

  std::string name() const { return (kind == Kind::cycle ? "C" : "P") + std::to_string(length); }

  int vertex_count() const { return kind == Kind::cycle ? length : length + 1; }

  /// Independence number of the pattern graph.
  int independence_number() const { return kind == Kind::cycle ? length / 2 : (length + 2) / 2; }

  Graph graph() const { return kind == Kind::cycle ? cycle_graph(length) : path_graph(length); }

  std::uint64_t count_in(const Graph& g) const {
    return kind == Kind::cycle ? count_cycle_copies(g, length) : count_path_copies(g, length);
  }

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

}  // namespace turan

#endif  // TURAN_PATTERN_HPP
