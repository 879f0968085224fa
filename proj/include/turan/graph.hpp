#ifndef TURAN_GRAPH_HPP
#define TURAN_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "turan/random.hpp"
#include "turan/vertex_set.hpp"

namespace turan {

/// Simple undirected graph on vertices 0..n-1 with one adjacency bit row per
/// vertex. Loops and parallel edges cannot be represented.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), VertexSet(n)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  }

  int size() const { return n_; }
  const VertexSet& row(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }

  bool has_edge(Vertex u, Vertex v) const { return rows_[static_cast<std::size_t>(u)].test(v); }

  /// Adds {u,v}. Returns false for a loop or an existing edge.
  bool add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || has_edge(u, v)) return false;
    rows_[static_cast<std::size_t>(u)].set(v);
    rows_[static_cast<std::size_t>(v)].set(u);
    return true;
  }

  bool remove_edge(Vertex u, Vertex v) {
    if (u == v || !has_edge(u, v)) return false;
    rows_[static_cast<std::size_t>(u)].reset(v);
    rows_[static_cast<std::size_t>(v)].reset(u);
    return true;
  }

  int degree(Vertex v) const { return row(v).count(); }

  std::int64_t edge_count() const {
    std::int64_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u) {
      VertexSet higher = row(u);
      higher.erase_up_to(u);
      higher.for_each([&](Vertex v) { out.emplace_back(u, v); });
    }
    return out;
  }

  std::vector<Vertex> neighbors(Vertex v) const { return row(v).members(); }

  /// |N(v) ∩ set|.
  int degree_into(Vertex v, const VertexSet& set) const { return row(v).intersection_count(set); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }

  int n_ = 0;
  std::vector<VertexSet> rows_;
};

/// Bipartite graph with explicit sides; only cross edges exist.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int side_a, int side_b)
      : a_(side_a), b_(side_b), rows_(static_cast<std::size_t>(side_a), VertexSet(side_b)) {
    if (side_a < 0 || side_b < 0) throw std::invalid_argument("BipartiteGraph: negative side");
  }

  int side_a() const { return a_; }
  int side_b() const { return b_; }

  bool has_edge(int a, int b) const { return rows_[static_cast<std::size_t>(a)].test(b); }
  void add_edge(int a, int b) {
    if (a < 0 || a >= a_ || b < 0 || b >= b_) throw std::out_of_range("BipartiteGraph: vertex out of range");
    rows_[static_cast<std::size_t>(a)].set(b);
  }
  void remove_edge(int a, int b) { rows_[static_cast<std::size_t>(a)].reset(b); }
  const VertexSet& row(int a) const { return rows_[static_cast<std::size_t>(a)]; }

  std::int64_t edge_count() const {
    std::int64_t e = 0;
    for (const auto& r : rows_) e += r.count();
    return e;
  }

  /// Side A becomes 0..a-1, side B becomes a..a+b-1.
  Graph to_graph() const {
    Graph g(a_ + b_);
    for (int a = 0; a < a_; ++a) row(a).for_each([&](Vertex b) { g.add_edge(a, a_ + b); });
    return g;
  }

 private:
  int a_ = 0;
  int b_ = 0;
  std::vector<VertexSet> rows_;
};

/// Ordered classes U_0..U_{s-1} covering a vertex range. Classes may be empty.
class VertexPartition {
 public:
  VertexPartition() = default;
  VertexPartition(std::vector<int> class_of, int class_count)
      : class_of_(std::move(class_of)), s_(class_count) {
    if (s_ < 1) throw std::invalid_argument("VertexPartition: need at least one class");
    for (int c : class_of_)
      if (c < 0 || c >= s_) throw std::invalid_argument("VertexPartition: class index out of range");
  }

  int vertex_count() const { return static_cast<int>(class_of_.size()); }
  int class_count() const { return s_; }
  int class_of(Vertex v) const { return class_of_[static_cast<std::size_t>(v)]; }
  std::span<const int> assignment() const { return class_of_; }

  std::vector<std::vector<Vertex>> classes() const {
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(s_));
    for (Vertex v = 0; v < vertex_count(); ++v) out[static_cast<std::size_t>(class_of(v))].push_back(v);
    return out;
  }

  std::vector<int> class_sizes() const {
    std::vector<int> out(static_cast<std::size_t>(s_), 0);
    for (int c : class_of_) ++out[static_cast<std::size_t>(c)];
    return out;
  }

 private:
  std::vector<int> class_of_;
  int s_ = 1;
};

// ---------------------------------------------------------------------------
// Standard graphs.

inline Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle_graph: need k >= 3");
  Graph g(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return g;
}

/// Path with k edges (k+1 vertices).
inline Graph path_graph(int k) {
  if (k < 0) throw std::invalid_argument("path_graph: negative length");
  Graph g(k + 1);
  for (int i = 0; i < k; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph complete_bipartite_graph(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

// ---------------------------------------------------------------------------
// Blow-ups, restriction, sampling.

struct BlowUp {
  Graph graph;
  VertexPartition partition;
};

/// Replaces base vertex i by an independent class of sizes[i] vertices; base
/// edges become complete bipartite graphs. Class i occupies a contiguous range.
inline BlowUp blow_up(const Graph& base, std::span<const int> sizes) {
  if (static_cast<int>(sizes.size()) != base.size())
    throw std::invalid_argument("blow_up: size list length does not match base vertex count");
  std::vector<int> offset(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw std::invalid_argument("blow_up: class sizes must be positive");
    offset[i + 1] = offset[i] + sizes[i];
  }
  const int total = offset.back();
  Graph g(total);
  std::vector<int> class_of(static_cast<std::size_t>(total));
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (int v = offset[i]; v < offset[i + 1]; ++v) class_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
  for (auto [i, j] : base.edges())
    for (int u = offset[static_cast<std::size_t>(i)]; u < offset[static_cast<std::size_t>(i) + 1]; ++u)
      for (int v = offset[static_cast<std::size_t>(j)]; v < offset[static_cast<std::size_t>(j) + 1]; ++v)
        g.add_edge(u, v);
  return {std::move(g), VertexPartition(std::move(class_of), std::max(base.size(), 1))};
}

inline BlowUp blow_up(const Graph& base, std::initializer_list<int> sizes) {
  return blow_up(base, std::span<const int>(sizes.begin(), sizes.size()));
}

/// G[S] relabelled in increasing vertex order. Duplicates are ignored.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted)
    if (v < 0 || v >= g.size()) throw std::out_of_range("induced_subgraph: vertex " + std::to_string(v) + " out of range");
  const int q = static_cast<int>(sorted.size());
  Graph h(q);
  for (int i = 0; i < q; ++i) {
    const VertexSet& r = g.row(sorted[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < q; ++j)
      if (r.test(sorted[static_cast<std::size_t>(j)])) h.add_edge(i, j);
  }
  return h;
}

inline Graph induced_subgraph(const Graph& g, std::initializer_list<Vertex> vertices) {
  return induced_subgraph(g, std::span<const Vertex>(vertices.begin(), vertices.size()));
}

/// Uniform q-subset of 0..n-1 (partial Fisher-Yates), returned sorted.
inline std::vector<Vertex> sample_vertices(int n, int q, Rng& rng) {
  if (q < 0 || q > n) throw std::invalid_argument("sample_vertices: need 0 <= q <= n");
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < q; ++i) {
    const auto j = static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(n - i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(q));
  std::sort(pool.begin(), pool.end());
  return pool;
}

/// Induced subgraph on a uniformly random q-subset.
inline Graph sample_induced(const Graph& g, int q, Rng& rng) {
  if (q < 0 || q > g.size()) throw std::invalid_argument("sample_induced: need 0 <= q <= n");
  return induced_subgraph(g, sample_vertices(g.size(), q, rng));
}

/// Each vertex independently uniform over s classes.
inline VertexPartition random_partition(int n, int s, Rng& rng) {
  if (s < 1) throw std::invalid_argument("random_partition: need s >= 1");
  std::vector<int> class_of(static_cast<std::size_t>(n));
  for (auto& c : class_of) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(s)));
  return VertexPartition(std::move(class_of), s);
}

inline VertexPartition random_partition(const Graph& g, int s, Rng& rng) { return random_partition(g.size(), s, rng); }

// ---------------------------------------------------------------------------
// Twin quotient.

/// Every graph is a blow-up of its quotient by the "same open neighbourhood"
/// relation. Twin classes are independent sets (there are no loops).
struct TwinQuotient {
  Graph base;                              // one vertex per twin class
  std::vector<int> class_size;             // |class|
  std::vector<std::vector<Vertex>> members;  // class -> vertices of g, increasing
  std::vector<int> class_of;               // vertex of g -> class
};

inline TwinQuotient twin_quotient(const Graph& g) {
  const int n = g.size();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  auto row_less = [&](Vertex a, Vertex b) {
    auto wa = g.row(a).words();
    auto wb = g.row(b).words();
    if (std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end())) return true;
    if (std::lexicographical_compare(wb.begin(), wb.end(), wa.begin(), wa.end())) return false;
    return a < b;
  };
  std::sort(order.begin(), order.end(), row_less);

  TwinQuotient q;
  q.class_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> groups;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || !(g.row(order[i]) == g.row(order[i - 1]))) groups.emplace_back();
    groups.back().push_back(order[i]);
  }
  // Number classes by their smallest member so the quotient is canonical.
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  const int h = static_cast<int>(groups.size());
  q.base = Graph(h);
  for (int c = 0; c < h; ++c) {
    auto& grp = groups[static_cast<std::size_t>(c)];
    std::sort(grp.begin(), grp.end());
    for (Vertex v : grp) q.class_of[static_cast<std::size_t>(v)] = c;
    q.class_size.push_back(static_cast<int>(grp.size()));
  }
  for (int c = 0; c < h; ++c) {
    const Vertex rep = groups[static_cast<std::size_t>(c)].front();
    g.row(rep).for_each([&](Vertex w) { q.base.add_edge(c, q.class_of[static_cast<std::size_t>(w)]); });
  }
  q.members = std::move(groups);
  return q;
}

}  // namespace turan

#endif  // TURAN_GRAPH_HPP
