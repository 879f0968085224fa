#ifndef TURAN_MAXCUT_HPP
#define TURAN_MAXCUT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/errors.hpp"
#include "turan/graph.hpp"
#include "turan/random.hpp"

// Max cut, distance to bipartiteness and distance to C_l-freeness.

namespace turan {

inline constexpr int kDefaultExactCutLimit = 28;

namespace detail {

// Maximum weighted cut of a quotient: class i has weight w_i and the edge
// {i,j} is worth w_i w_j. Gray-code enumeration of 2^(h-1) assignments,
// class h-1 fixed on side 0.
inline std::int64_t quotient_max_cut(const Graph& h, const std::vector<int>& weight) {
  const int k = h.size();
  if (k <= 1) return 0;
  if (k > 62) throw LimitExceeded("max cut: quotient too large for exact enumeration");
  std::vector<std::uint64_t> row(static_cast<std::size_t>(k), 0);
  for (auto [u, v] : h.edges()) {
    row[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    row[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  const bool unit = std::all_of(weight.begin(), weight.end(), [](int w) { return w == 1; });
  std::uint64_t side = 0;  // bit set = side 1
  std::int64_t cut = 0;
  std::int64_t best = 0;
  const std::uint64_t steps = std::uint64_t{1} << (k - 1);
  for (std::uint64_t i = 1; i < steps; ++i) {
    const int v = std::countr_zero(i);
    const std::uint64_t nb = row[static_cast<std::size_t>(v)];
    const bool on = side >> v & 1U;
    const std::uint64_t same = on ? (nb & side) : (nb & ~side);
    const std::uint64_t other = nb & ~same;
    std::int64_t delta = 0;
    if (unit) {
      delta = std::popcount(same) - std::popcount(other);
    } else {
      for (std::uint64_t s = same; s; s &= s - 1) delta += weight[static_cast<std::size_t>(std::countr_zero(s))];
      for (std::uint64_t s = other; s; s &= s - 1) delta -= weight[static_cast<std::size_t>(std::countr_zero(s))];
      delta *= weight[static_cast<std::size_t>(v)];
    }
    cut += delta;
    side ^= std::uint64_t{1} << v;
    best = std::max(best, cut);
  }
  return best;
}

}  // namespace detail

/// Exact maximum cut. Twins can always share a side in an optimal cut, so
/// the enumeration runs over twin classes; `limit` bounds the number of
/// classes (for twin-free graphs that is n).
inline std::int64_t max_cut_exact(const Graph& g, int limit = kDefaultExactCutLimit) {
  const TwinQuotient q = twin_quotient(g);
  if (q.base.size() > limit)
    throw LimitExceeded("max_cut_exact: " + std::to_string(q.base.size()) + " twin classes exceed limit " + std::to_string(limit));
  return detail::quotient_max_cut(q.base, q.class_size);
}

/// Whether max_cut_exact would accept g under `limit`.
inline bool exact_cut_feasible(const Graph& g, int limit = kDefaultExactCutLimit) {
  return twin_quotient(g).base.size() <= limit;
}

namespace detail {

// Single-vertex-flip local search from `side`; returns the cut value.
inline std::int64_t local_search_cut(const Graph& g, std::vector<char>& side) {
  const int n = g.size();
  VertexSet ones(n);
  for (Vertex v = 0; v < n; ++v)
    if (side[static_cast<std::size_t>(v)]) ones.set(v);
  // gain[v] = (neighbours on v's side) - (neighbours across).
  std::vector<int> gain(static_cast<std::size_t>(n));
  std::int64_t cut = 0;
  for (Vertex v = 0; v < n; ++v) {
    const int d = g.degree(v);
    const int in_ones = g.degree_into(v, ones);
    const int same = side[static_cast<std::size_t>(v)] ? in_ones : d - in_ones;
    gain[static_cast<std::size_t>(v)] = same - (d - same);
    cut += d - same;
  }
  cut /= 2;
  bool improved = true;
  while (improved) {
    improved = false;
    for (Vertex v = 0; v < n; ++v) {
      if (gain[static_cast<std::size_t>(v)] <= 0) continue;
      cut += gain[static_cast<std::size_t>(v)];
      const bool was = side[static_cast<std::size_t>(v)];
      side[static_cast<std::size_t>(v)] = !was;
      gain[static_cast<std::size_t>(v)] = -gain[static_cast<std::size_t>(v)];
      g.row(v).for_each([&](Vertex w) {
        // v left w's side (gain drops) or joined it (gain rises).
        const bool w_side = side[static_cast<std::size_t>(w)];
        gain[static_cast<std::size_t>(w)] += (w_side == was) ? -2 : 2;
      });
      improved = true;
    }
  }
  return cut;
}

// Breadth-first 2-colouring start (exact on bipartite graphs).
inline std::vector<char> bfs_coloring(const Graph& g) {
  const int n = g.size();
  std::vector<char> side(static_cast<std::size_t>(n), 0);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    seen[static_cast<std::size_t>(s)] = 1;
    queue.assign(1, s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Vertex v = queue[i];
      g.row(v).for_each([&](Vertex w) {
        if (seen[static_cast<std::size_t>(w)]) return;
        seen[static_cast<std::size_t>(w)] = 1;
        side[static_cast<std::size_t>(w)] = !side[static_cast<std::size_t>(v)];
        queue.push_back(w);
      });
    }
  }
  return side;
}

}  // namespace detail

/// Lower bound on the max cut: best of a BFS-colouring start and
/// `restarts - 1` random starts. Each start is improved by single-vertex
/// flips, then by iterated kicks (flip a few random vertices, re-optimise,
/// keep the result if it is no worse).
inline std::int64_t max_cut_heuristic(const Graph& g, Rng& rng, int restarts = 8) {
  if (restarts < 1) throw std::invalid_argument("max_cut_heuristic: need at least one restart");
  const int n = g.size();
  if (n < 2) return 0;
  const int kicks = 20 + 2 * n;
  const int kick_size = std::max(2, n / 10);
  std::int64_t best = 0;
  std::vector<char> side;
  for (int r = 0; r < restarts; ++r) {
    if (r == 0) {
      side = detail::bfs_coloring(g);
    } else {
      for (auto& s : side) s = static_cast<char>(rng.below(2));
    }
    std::int64_t value = detail::local_search_cut(g, side);
    for (int k = 0; k < kicks && value < g.edge_count(); ++k) {
      auto trial = side;
      for (int i = 0; i < kick_size; ++i) {
        auto& s = trial[rng.below(static_cast<std::uint64_t>(n))];
        s = static_cast<char>(!s);
      }
      const std::int64_t v = detail::local_search_cut(g, trial);
      if (v >= value) {
        value = v;
        side = std::move(trial);
      }
    }
    best = std::max(best, value);
  }
  return best;
}

enum class CutMethod { exact, heuristic, automatic };

struct BipartiteDistance {
  std::int64_t edges_to_remove = 0;
  double farness = 0;  // edges_to_remove / n^2
  bool exact = false;
};

/// e(g) - maxcut(g). `automatic` is exact when the twin quotient fits the
/// limit and heuristic (an upper bound on the distance) otherwise.
inline BipartiteDistance bipartite_distance(const Graph& g, CutMethod method, Rng& rng, int limit = kDefaultExactCutLimit,
                                            int restarts = 8) {
  BipartiteDistance out;
  std::int64_t cut = 0;
  const TwinQuotient q = twin_quotient(g);
  const bool fits = q.base.size() <= limit;
  if (method == CutMethod::exact && !fits)
    throw LimitExceeded("bipartite_distance: " + std::to_string(q.base.size()) + " twin classes exceed limit " + std::to_string(limit));
  if (method == CutMethod::exact || (method == CutMethod::automatic && fits)) {
    cut = detail::quotient_max_cut(q.base, q.class_size);
    out.exact = true;
  } else {
    cut = max_cut_heuristic(g, rng, restarts);
  }
  out.edges_to_remove = g.edge_count() - cut;
  const double n = g.size();
  out.farness = g.size() ? static_cast<double>(out.edges_to_remove) / (n * n) : 0.0;
  return out;
}

inline BipartiteDistance bipartite_distance(const Graph& g, int limit = kDefaultExactCutLimit) {
  Rng unused(0);
  return bipartite_distance(g, CutMethod::exact, unused, limit);
}

/// Max-cut density maxcut(G[Q]) / q^2 of a uniform q-sample Q.
inline double maxcut_sample_estimate(const Graph& g, int q, Rng& rng, int limit = kDefaultExactCutLimit, int restarts = 8) {
  if (q < 0 || q > g.size()) throw std::invalid_argument("maxcut_sample_estimate: need 0 <= q <= n");
  if (q == 0) return 0.0;
  const Graph s = sample_induced(g, q, rng);
  const TwinQuotient quot = twin_quotient(s);
  const std::int64_t cut = quot.base.size() <= limit ? detail::quotient_max_cut(quot.base, quot.class_size)
                                                     : max_cut_heuristic(s, rng, restarts);
  return static_cast<double>(cut) / (static_cast<double>(q) * q);
}

// ---------------------------------------------------------------------------
// Distance to C_l-freeness.

struct FreeDistanceBudget {
  std::size_t max_copies = 500000;
  std::uint64_t max_nodes = 50000000;
};

/// Calls f(cycle) for every copy of C_k (vertex sequence, smallest vertex
/// first, second vertex smaller than last).
inline void for_each_cycle(const Graph& g, int k, const std::function<void(const std::vector<Vertex>&)>& f) {
  if (k < 3) throw std::invalid_argument("for_each_cycle: need k >= 3");
  const int n = g.size();
  std::vector<Vertex> path;
  VertexSet avail(n);
  auto extend = [&](auto&& self, Vertex v) -> void {
    if (static_cast<int>(path.size()) == k) {
      if (g.has_edge(v, path[0]) && path[1] < v) f(path);
      return;
    }
    VertexSet cand = g.row(v) & avail;
    for (Vertex w = cand.first(); w >= 0; w = cand.next(w + 1)) {
      avail.reset(w);
      path.push_back(w);
      self(self, w);
      path.pop_back();
      avail.set(w);
    }
  };
  for (Vertex s = 0; s + k <= n; ++s) {
    avail = VertexSet::full(n);
    avail.erase_up_to(s);
    path.assign(1, s);
    extend(extend, s);
  }
}

/// Minimum number of edge deletions that destroy every C_l: a minimum
/// hitting set of the copies' edge sets, found by branch and bound with a
/// disjoint-packing lower bound.
inline std::int64_t f_free_distance(const Graph& g, int l, FreeDistanceBudget budget = {}) {
  if (l < 3) throw std::invalid_argument("f_free_distance: need l >= 3");
  const auto edge_list = g.edges();
  const int n = g.size();
  std::vector<int> edge_id(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    auto [u, v] = edge_list[i];
    edge_id[static_cast<std::size_t>(u) * n + v] = edge_id[static_cast<std::size_t>(v) * n + u] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> copies;
  for_each_cycle(g, l, [&](const std::vector<Vertex>& c) {
    if (copies.size() >= budget.max_copies) throw LimitExceeded("f_free_distance: too many cycle copies");
    std::vector<int> ids;
    for (std::size_t i = 0; i < c.size(); ++i)
      ids.push_back(edge_id[static_cast<std::size_t>(c[i]) * n + c[(i + 1) % c.size()]]);
    std::sort(ids.begin(), ids.end());
    copies.push_back(std::move(ids));
  });
  if (copies.empty()) return 0;

  const std::size_t m = edge_list.size();
  std::vector<std::vector<int>> copies_of(m);
  for (std::size_t c = 0; c < copies.size(); ++c)
    for (int e : copies[c]) copies_of[static_cast<std::size_t>(e)].push_back(static_cast<int>(c));

  std::vector<int> hit(copies.size(), 0);      // chosen edges in the copy
  std::vector<char> banned(m, 0);              // edges excluded in this branch
  std::int64_t best = 0;
  {
    // Greedy upper bound: repeatedly take the edge in most unhit copies.
    std::vector<int> h(copies.size(), 0);
    std::size_t left = copies.size();
    while (left > 0) {
      std::size_t arg = 0;
      int most = -1;
      for (std::size_t e = 0; e < m; ++e) {
        int cnt = 0;
        for (int c : copies_of[e]) cnt += h[static_cast<std::size_t>(c)] == 0;
        if (cnt > most) {
          most = cnt;
          arg = e;
        }
      }
      for (int c : copies_of[arg])
        if (h[static_cast<std::size_t>(c)]++ == 0) --left;
      ++best;
    }
  }
  std::uint64_t nodes = 0;

  auto lower_bound = [&]() {
    // Edge-disjoint unhit copies need distinct deletions.
    std::vector<char> taken(m, 0);
    std::int64_t lb = 0;
    for (std::size_t c = 0; c < copies.size(); ++c) {
      if (hit[c]) continue;
      bool disjoint = true;
      for (int e : copies[c])
        if (taken[static_cast<std::size_t>(e)]) disjoint = false;
      if (!disjoint) continue;
      for (int e : copies[c]) taken[static_cast<std::size_t>(e)] = 1;
      ++lb;
    }
    return lb;
  };

  auto search = [&](auto&& self, std::int64_t chosen) -> void {
    if (++nodes > budget.max_nodes) throw LimitExceeded("f_free_distance: node budget exhausted");
    std::size_t pick = copies.size();
    int fewest = l + 1;
    for (std::size_t c = 0; c < copies.size(); ++c) {
      if (hit[c]) continue;
      int open = 0;
      for (int e : copies[c]) open += !banned[static_cast<std::size_t>(e)];
      if (open == 0) return;  // cannot be hit in this branch
      if (open < fewest) {
        fewest = open;
        pick = c;
      }
    }
    if (pick == copies.size()) {
      best = std::min(best, chosen);
      return;
    }
    if (chosen + lower_bound() >= best) return;
    std::vector<int> branch;
    for (int e : copies[pick])
      if (!banned[static_cast<std::size_t>(e)]) branch.push_back(e);
    std::vector<int> undo;
    for (int e : branch) {
      for (int c : copies_of[static_cast<std::size_t>(e)]) ++hit[static_cast<std::size_t>(c)];
      self(self, chosen + 1);
      for (int c : copies_of[static_cast<std::size_t>(e)]) --hit[static_cast<std::size_t>(c)];
      banned[static_cast<std::size_t>(e)] = 1;
      undo.push_back(e);
    }
    for (int e : undo) banned[static_cast<std::size_t>(e)] = 0;
  };
  search(search, 0);
  return best;
}

}  // namespace turan

#endif  // TURAN_MAXCUT_HPP
