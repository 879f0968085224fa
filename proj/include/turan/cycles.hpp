#ifndef TURAN_CYCLES_HPP
#define TURAN_CYCLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "turan/counting.hpp"
#include "turan/graph.hpp"

// Exact cycle-length queries.
//
// A graph G is the blow-up of its twin quotient H. G contains C_l (l >= 3)
// exactly when H has a closed walk of length l visiting each class no more
// often than the class has vertices. Closed walks are connected Eulerian
// edge multisets y on E(H); each one is written as y = y0 + 2z where
// y0 = b + 2(S - b) for its support S and its parity pattern b (an even
// subgraph of S), and z >= 0 lives on S. The class budgets become degree
// bounds deg_z(v) <= r_v, so for fixed (S, b) the reachable lengths are
// exactly sum(y0) + 2t for 0 <= t <= nu, nu being a maximum b-matching.
// When H is small this decides every l at once; otherwise we fall back to a
// pruned depth-first search on G.

namespace turan {

namespace detail {

struct SmallEdge {
  int u;
  int v;
};

/// Maximum uncapacitated b-matching (edges reusable) on a graph with at most
/// ~12 vertices, via min over U of r(U) + sum over non-singleton components
/// K of G - U of floor(r(K) / 2).
inline std::int64_t max_b_matching(int vertex_count, const std::vector<SmallEdge>& edges, const std::vector<std::int64_t>& r) {
  if (edges.empty()) return 0;
  std::int64_t best = -1;
  std::vector<int> parent(static_cast<std::size_t>(vertex_count));
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  std::vector<std::int64_t> weight(static_cast<std::size_t>(vertex_count));
  std::vector<char> nontrivial(static_cast<std::size_t>(vertex_count));
  for (std::uint32_t removed = 0; removed < (1U << vertex_count); ++removed) {
    std::int64_t value = 0;
    for (int v = 0; v < vertex_count; ++v) {
      parent[static_cast<std::size_t>(v)] = v;
      nontrivial[static_cast<std::size_t>(v)] = 0;
      weight[static_cast<std::size_t>(v)] = 0;
      if (removed >> v & 1U) value += r[static_cast<std::size_t>(v)];
    }
    if (best >= 0 && value >= best) continue;
    for (const auto& e : edges) {
      if ((removed >> e.u & 1U) || (removed >> e.v & 1U)) continue;
      const int a = find(e.u);
      const int b = find(e.v);
      if (a != b) parent[static_cast<std::size_t>(a)] = b;
      nontrivial[static_cast<std::size_t>(e.u)] = 1;
      nontrivial[static_cast<std::size_t>(e.v)] = 1;
    }
    for (int v = 0; v < vertex_count; ++v)
      if (!(removed >> v & 1U) && nontrivial[static_cast<std::size_t>(v)]) weight[static_cast<std::size_t>(find(v))] += r[static_cast<std::size_t>(v)];
    for (int v = 0; v < vertex_count; ++v)
      if (find(v) == v) value += weight[static_cast<std::size_t>(v)] / 2;
    if (best < 0 || value < best) best = value;
  }
  return best;
}

}  // namespace detail

/// Answers "does g contain C_l?" for any l, reusing the twin quotient and the
/// odd girth across queries. Holds a reference to g.
class CycleOracle {
 public:
  static constexpr int kWalkMaxClasses = 10;
  static constexpr int kWalkMaxEdges = 10;

  explicit CycleOracle(const Graph& g) : g_(g), quotient_(twin_quotient(g)) {
    odd_girth_ = quotient_odd_girth();
  }

  const Graph& graph() const { return g_; }
  const TwinQuotient& quotient() const { return quotient_; }

  /// Shortest odd cycle length; 0 when the graph is bipartite.
  int odd_girth() const { return odd_girth_; }

  bool uses_walk_method() const {
    return quotient_.base.size() <= kWalkMaxClasses && quotient_.base.edge_count() <= kWalkMaxEdges;
  }

  bool contains(int length) {
    if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
    if (length > g_.size()) return false;
    if (length % 2 == 1 && (odd_girth_ == 0 || odd_girth_ > length)) return false;
    if (uses_walk_method()) {
      build_walk_table();
      for (const auto& p : patterns_)
        if (pattern_allows(p, length)) return true;
      return false;
    }
    return dfs_cycle(length).has_value();
  }

  /// A cycle of the given length as a vertex sequence, if any.
  std::optional<std::vector<Vertex>> find(int length) {
    if (!contains(length)) return std::nullopt;
    if (uses_walk_method()) {
      for (const auto& p : patterns_)
        if (pattern_allows(p, length)) return realize(p, length);
    }
    return dfs_cycle(length);
  }

 private:
  struct Pattern {
    std::uint32_t support;
    std::uint32_t parity;
    std::int64_t base_length;
    std::int64_t slack;  // nu
  };

  static bool pattern_allows(const Pattern& p, int length) {
    const std::int64_t extra = length - p.base_length;
    return extra >= 0 && extra % 2 == 0 && extra / 2 <= p.slack;
  }

  int quotient_odd_girth() const {
    const Graph& h = quotient_.base;
    const int n = h.size();
    int best = 0;
    std::vector<int> depth(static_cast<std::size_t>(n));
    for (Vertex root = 0; root < n; ++root) {
      std::fill(depth.begin(), depth.end(), -1);
      depth[static_cast<std::size_t>(root)] = 0;
      std::vector<Vertex> frontier{root};
      for (int d = 0; !frontier.empty(); ++d) {
        if (best && 2 * d + 1 >= best) break;
        bool closed = false;
        std::vector<Vertex> next;
        for (Vertex v : frontier) {
          h.row(v).for_each([&](Vertex w) {
            auto& dw = depth[static_cast<std::size_t>(w)];
            if (dw == d) closed = true;
            if (dw < 0) {
              dw = d + 1;
              next.push_back(w);
            }
          });
        }
        if (closed) {
          best = 2 * d + 1;
          break;
        }
        frontier = std::move(next);
      }
    }
    return best;
  }

  // (support, parity) pairs with their length window.
  void build_walk_table() {
    if (table_built_) return;
    table_built_ = true;
    const Graph& h = quotient_.base;
    edges_.clear();
    for (auto [u, v] : h.edges()) edges_.push_back({u, v});
    const int m = static_cast<int>(edges_.size());
    const int hn = h.size();
    std::set<std::pair<std::int64_t, std::int64_t>> seen;  // (base_length, slack) dedup
    std::vector<int> parent(static_cast<std::size_t>(hn));
    for (std::uint32_t support = 1; support < (1U << m); ++support) {
      if (!connected(support, parent)) continue;
      for (std::uint32_t parity = support;; parity = (parity - 1) & support) {
        evaluate(support, parity, seen);
        if (parity == 0) break;
      }
    }
  }

  bool connected(std::uint32_t support, std::vector<int>& parent) const {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    int components = 0;
    std::vector<char> touched(parent.size(), 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (!(support >> i & 1U)) continue;
      for (int x : {edges_[i].u, edges_[i].v})
        if (!touched[static_cast<std::size_t>(x)]) {
          touched[static_cast<std::size_t>(x)] = 1;
          ++components;
        }
      const int a = find(edges_[i].u);
      const int b = find(edges_[i].v);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --components;
      }
    }
    return components == 1;
  }

  // Budgets left after the mandatory part y0; empty when infeasible.
  std::optional<std::vector<std::int64_t>> residual(std::uint32_t support, std::uint32_t parity, std::int64_t& base_length) const {
    const int hn = quotient_.base.size();
    std::vector<std::int64_t> deg(static_cast<std::size_t>(hn), 0);
    base_length = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (!(support >> i & 1U)) continue;
      const int mult = (parity >> i & 1U) ? 1 : 2;
      deg[static_cast<std::size_t>(edges_[i].u)] += mult;
      deg[static_cast<std::size_t>(edges_[i].v)] += mult;
      base_length += mult;
    }
    std::vector<std::int64_t> r(static_cast<std::size_t>(hn), 0);
    for (int v = 0; v < hn; ++v) {
      if (deg[static_cast<std::size_t>(v)] % 2) return std::nullopt;
      r[static_cast<std::size_t>(v)] = quotient_.class_size[static_cast<std::size_t>(v)] - deg[static_cast<std::size_t>(v)] / 2;
      if (r[static_cast<std::size_t>(v)] < 0) return std::nullopt;
    }
    return r;
  }

  std::vector<detail::SmallEdge> support_edges(std::uint32_t support) const {
    std::vector<detail::SmallEdge> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (support >> i & 1U) out.push_back(edges_[i]);
    return out;
  }

  void evaluate(std::uint32_t support, std::uint32_t parity, std::set<std::pair<std::int64_t, std::int64_t>>& seen) {
    std::int64_t base_length = 0;
    auto r = residual(support, parity, base_length);
    if (!r) return;
    const std::int64_t nu = detail::max_b_matching(quotient_.base.size(), support_edges(support), *r);
    if (!seen.insert({base_length, nu}).second) return;
    patterns_.push_back({support, parity, base_length, nu});
  }

  // Builds a concrete closed walk for the pattern and lifts it to g.
  std::vector<Vertex> realize(const Pattern& p, int length) const {
    std::int64_t base_length = 0;
    std::vector<std::int64_t> r = *residual(p.support, p.parity, base_length);
    std::vector<detail::SmallEdge> rest = support_edges(p.support);
    std::vector<std::int64_t> mult;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (p.support >> i & 1U) mult.push_back((p.parity >> i & 1U) ? 1 : 2);

    // Choose z edge by edge so that the remaining edges can still carry the
    // remaining amount.
    std::int64_t need = (length - base_length) / 2;
    const int hn = quotient_.base.size();
    for (std::size_t i = 0; i < mult.size(); ++i) {
      const auto e = rest[i];
      std::vector<detail::SmallEdge> later(rest.begin() + static_cast<std::ptrdiff_t>(i) + 1, rest.end());
      std::int64_t w = std::min({r[static_cast<std::size_t>(e.u)], r[static_cast<std::size_t>(e.v)], need});
      for (; w > 0; --w) {
        auto r2 = r;
        r2[static_cast<std::size_t>(e.u)] -= w;
        r2[static_cast<std::size_t>(e.v)] -= w;
        if (w + detail::max_b_matching(hn, later, r2) >= need) break;
      }
      r[static_cast<std::size_t>(e.u)] -= w;
      r[static_cast<std::size_t>(e.v)] -= w;
      mult[i] += 2 * w;
      need -= w;
    }

    // Hierholzer on the multigraph.
    std::vector<std::vector<std::pair<int, std::size_t>>> adj(static_cast<std::size_t>(hn));
    std::vector<std::int64_t> left = mult;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      adj[static_cast<std::size_t>(rest[i].u)].push_back({rest[i].v, i});
      adj[static_cast<std::size_t>(rest[i].v)].push_back({rest[i].u, i});
    }
    std::vector<std::size_t> cursor(static_cast<std::size_t>(hn), 0);
    std::vector<int> stack{rest.front().u};
    std::vector<int> circuit;
    while (!stack.empty()) {
      const int v = stack.back();
      auto& c = cursor[static_cast<std::size_t>(v)];
      auto& list = adj[static_cast<std::size_t>(v)];
      while (c < list.size() && left[list[c].second] == 0) ++c;
      if (c == list.size()) {
        circuit.push_back(v);
        stack.pop_back();
      } else {
        --left[list[c].second];
        stack.push_back(list[c].first);
      }
    }
    circuit.pop_back();  // closed: last equals first

    std::vector<std::size_t> used(static_cast<std::size_t>(hn), 0);
    std::vector<Vertex> cycle;
    for (int cls : circuit) cycle.push_back(quotient_.members[static_cast<std::size_t>(cls)][used[static_cast<std::size_t>(cls)]++]);
    return cycle;
  }

  // Cycle with smallest vertex s: a path s, v1, ..., v_{l-1} inside vertices
  // above s, with v_{l-1} adjacent to s.
  std::optional<std::vector<Vertex>> dfs_cycle(int length) const {
    const int n = g_.size();
    for (Vertex s = 0; s + length <= n; ++s) {
      VertexSet allowed = VertexSet::full(n);
      allowed.erase_up_to(s - 1);
      // Distances to s inside the allowed region.
      std::vector<int> dist(static_cast<std::size_t>(n), -1);
      dist[static_cast<std::size_t>(s)] = 0;
      VertexSet frontier(n);
      frontier.set(s);
      VertexSet seen(n);
      seen.set(s);
      int reached = 1;
      for (int d = 1; frontier.any(); ++d) {
        VertexSet next(n);
        frontier.for_each([&](Vertex v) { next |= g_.row(v); });
        next &= allowed;
        next -= seen;
        next.for_each([&](Vertex v) { dist[static_cast<std::size_t>(v)] = d; });
        reached += next.count();
        seen |= next;
        frontier = std::move(next);
      }
      if (reached < length) continue;

      std::vector<Vertex> path{s};
      VertexSet avail = seen;
      avail.reset(s);
      auto extend = [&](auto&& self, Vertex v, int remaining) -> bool {
        if (remaining == 0) return g_.has_edge(v, s);
        VertexSet cand = g_.row(v) & avail;
        for (Vertex w = cand.first(); w >= 0; w = cand.next(w + 1)) {
          if (dist[static_cast<std::size_t>(w)] > remaining) continue;
          avail.reset(w);
          path.push_back(w);
          if (self(self, w, remaining - 1)) return true;
          path.pop_back();
          avail.set(w);
        }
        return false;
      };
      if (extend(extend, s, length - 1)) return path;
    }
    return std::nullopt;
  }

  const Graph& g_;
  TwinQuotient quotient_;
  int odd_girth_ = 0;
  bool table_built_ = false;
  std::vector<detail::SmallEdge> edges_;
  std::vector<Pattern> patterns_;
};

inline bool contains_cycle_of_length(const Graph& g, int length) { return CycleOracle(g).contains(length); }

inline std::optional<std::vector<Vertex>> find_cycle_of_length(const Graph& g, int length) {
  return CycleOracle(g).find(length);
}

/// L-free: no C_l for any l in L. Lengths above n are vacuous.
inline bool is_L_free(const Graph& g, std::span<const int> lengths) {
  CycleOracle oracle(g);
  for (int l : lengths)
    if (oracle.contains(l)) return false;
  return true;
}

inline bool is_L_free(const Graph& g, std::initializer_list<int> lengths) {
  return is_L_free(g, std::span<const int>(lengths.begin(), lengths.size()));
}

/// Length of a shortest odd cycle, absent for bipartite graphs.
inline std::optional<int> shortest_odd_cycle(const Graph& g) {
  const int girth = CycleOracle(g).odd_girth();
  if (girth == 0) return std::nullopt;
  return girth;
}

inline bool is_bipartite(const Graph& g) { return !shortest_odd_cycle(g).has_value(); }

}  // namespace turan

#endif  // TURAN_CYCLES_HPP
