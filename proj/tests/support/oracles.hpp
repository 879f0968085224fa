#ifndef TURAN_TESTS_ORACLES_HPP
#define TURAN_TESTS_ORACLES_HPP

// Slow reference implementations. They only use Graph::size / has_edge and
// plain enumeration, never the library's counting or search code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace oracle {

using turan::Graph;

// Calls f on every sequence of `len` distinct vertices.
inline void for_each_sequence(int n, int len, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> seq;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(seq.size()) == len) {
      f(seq);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      seq.push_back(v);
      rec();
      seq.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  if (len <= n) rec();
}

inline bool is_walk(const Graph& g, const std::vector<int>& s, bool closed) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (!g.has_edge(s[i], s[i + 1])) return false;
  return !closed || g.has_edge(s.back(), s.front());
}

// Copies of C_k: closed sequences / 2k.
inline std::uint64_t cycles(const Graph& g, int k) {
  std::uint64_t seqs = 0;
  for_each_sequence(g.size(), k, [&](const std::vector<int>& s) { seqs += is_walk(g, s, true); });
  return seqs / (2 * static_cast<std::uint64_t>(k));
}

// Copies of P_k (k edges): sequences / 2.
inline std::uint64_t paths(const Graph& g, int k) {
  std::uint64_t seqs = 0;
  for_each_sequence(g.size(), k + 1, [&](const std::vector<int>& s) { seqs += is_walk(g, s, false); });
  return seqs / 2;
}

// Paths with k edges starting at v.
inline std::uint64_t paths_from(const Graph& g, int v, int k) {
  std::uint64_t seqs = 0;
  for_each_sequence(g.size(), k + 1, [&](const std::vector<int>& s) { seqs += s[0] == v && is_walk(g, s, false); });
  return seqs;
}

inline bool has_cycle(const Graph& g, int k) {
  if (k > g.size()) return false;
  bool found = false;
  std::vector<int> seq;
  std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
  // The smallest vertex of the cycle goes first.
  std::function<void(int)> extend = [&](int s) {
    if (static_cast<int>(seq.size()) == k) {
      found = g.has_edge(seq.back(), seq.front());
      return;
    }
    for (int v = s + 1; v < g.size() && !found; ++v) {
      if (used[static_cast<std::size_t>(v)] || !g.has_edge(seq.back(), v)) continue;
      used[static_cast<std::size_t>(v)] = 1;
      seq.push_back(v);
      extend(s);
      seq.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  for (int s = 0; s < g.size() && !found; ++s) {
    seq = {s};
    extend(s);
  }
  return found;
}

inline int odd_girth(const Graph& g) {
  for (int k = 3; k <= g.size(); k += 2)
    if (has_cycle(g, k)) return k;
  return 0;
}

// c(U_1..U_k): sequences v_1..v_k, v_i in U_i, distinct, closed.
inline std::uint64_t partition_cycles(const Graph& g, const std::vector<std::vector<int>>& classes) {
  const int k = static_cast<int>(classes.size());
  std::uint64_t total = 0;
  for_each_sequence(g.size(), k, [&](const std::vector<int>& s) {
    for (int i = 0; i < k; ++i)
      if (std::find(classes[static_cast<std::size_t>(i)].begin(), classes[static_cast<std::size_t>(i)].end(),
                    s[static_cast<std::size_t>(i)]) == classes[static_cast<std::size_t>(i)].end())
        return;
    total += is_walk(g, s, true);
  });
  return total;
}

// p(U_1..U_s): sequences v_1..v_s, v_i in U_i, distinct, consecutive adjacent.
inline std::uint64_t partition_paths(const Graph& g, const std::vector<std::vector<int>>& classes) {
  const int k = static_cast<int>(classes.size());
  std::uint64_t total = 0;
  for_each_sequence(g.size(), k, [&](const std::vector<int>& s) {
    for (int i = 0; i < k; ++i)
      if (std::find(classes[static_cast<std::size_t>(i)].begin(), classes[static_cast<std::size_t>(i)].end(),
                    s[static_cast<std::size_t>(i)]) == classes[static_cast<std::size_t>(i)].end())
        return;
    total += is_walk(g, s, false);
  });
  return total;
}

inline std::int64_t edge_count(const Graph& g) {
  std::int64_t e = 0;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v) e += g.has_edge(u, v);
  return e;
}

// Max cut over all 2^n side assignments.
inline std::int64_t max_cut(const Graph& g) {
  const int n = g.size();
  std::int64_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t cut = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.has_edge(u, v) && (((mask >> u) ^ (mask >> v)) & 1U)) ++cut;
    best = std::max(best, cut);
  }
  return best;
}

// Fewest edge deletions leaving no C_l, by trying deletion sets in order of size.
inline std::int64_t free_distance(const Graph& g, int l) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (g.has_edge(u, v)) edges.emplace_back(u, v);
  const int m = static_cast<int>(edges.size());
  for (int size = 0; size <= m; ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::function<bool(int, int)> rec = [&](int start, int depth) {
      if (depth == size) {
        Graph h = g;
        for (int i : pick) h.remove_edge(edges[static_cast<std::size_t>(i)].first, edges[static_cast<std::size_t>(i)].second);
        return !has_cycle(h, l);
      }
      for (int i = start; i < m; ++i) {
        pick[static_cast<std::size_t>(depth)] = i;
        if (rec(i + 1, depth + 1)) return true;
      }
      return false;
    };
    if (rec(0, 0)) return size;
  }
  return m;
}

// Max sum of x_e over nonnegative integers with sum_{e at v} x_e <= r_v.
inline std::int64_t b_matching(int vertex_count, const std::vector<std::pair<int, int>>& edges, std::vector<std::int64_t> r) {
  std::function<std::int64_t(std::size_t)> rec = [&](std::size_t i) -> std::int64_t {
    if (i == edges.size()) return 0;
    const auto [u, v] = edges[i];
    const std::int64_t cap = u == v ? r[static_cast<std::size_t>(u)] / 2
                                    : std::min(r[static_cast<std::size_t>(u)], r[static_cast<std::size_t>(v)]);
    std::int64_t best = 0;
    for (std::int64_t x = 0; x <= cap; ++x) {
      r[static_cast<std::size_t>(u)] -= x;
      r[static_cast<std::size_t>(v)] -= x;
      best = std::max(best, x + rec(i + 1));
      r[static_cast<std::size_t>(u)] += x;
      r[static_cast<std::size_t>(v)] += x;
    }
    return best;
  };
  (void)vertex_count;
  return rec(0);
}

// graph6 written straight from the format description: N(n) then the upper
// triangle column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), padded to
// a multiple of six bits, each six bits + 63.
inline std::string graph6(const Graph& g) {
  const int n = g.size();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = v * 2 + bits[i + static_cast<std::size_t>(b)];
    out.push_back(static_cast<char>(v + 63));
  }
  return out;
}

// Every labeled graph on n vertices, by edge mask over pairs (0,1),(0,2),...
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1U) g.add_edge(u, v);
  return g;
}

// ex(n, T, {C_l}) by scanning all labeled graphs; count(T) via sequences.
struct NaiveExTable {
  int n = 0;
  // value[target index][l - 3], targets C3, C4, C5, P2, P3; l in 3..7
  std::uint64_t value[5][5] = {};
};

inline NaiveExTable naive_ex_table(int n) {
  NaiveExTable t;
  t.n = n;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    const Graph g = graph_from_mask(n, mask);
    bool has[5];
    for (int l = 3; l <= 7; ++l) has[l - 3] = has_cycle(g, l);
    const std::uint64_t counts[5] = {cycles(g, 3), cycles(g, 4), cycles(g, 5), paths(g, 2), paths(g, 3)};
    for (int ti = 0; ti < 5; ++ti)
      for (int l = 3; l <= 7; ++l)
        if (!has[l - 3]) t.value[ti][l - 3] = std::max(t.value[ti][l - 3], counts[ti]);
  }
  return t;
}

// Wilson interval from the textbook formula with the 97.5% normal quantile.
inline std::pair<double, double> wilson95(int successes, int trials) {
  const double z = 1.959963984540054;
  const double n = trials;
  const double p = successes / n;
  const double c = (p + z * z / (2 * n)) / (1 + z * z / n);
  const double h = z / (1 + z * z / n) * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n));
  return {std::max(0.0, c - h), std::min(1.0, c + h)};
}

}  // namespace oracle

#endif  // TURAN_TESTS_ORACLES_HPP
