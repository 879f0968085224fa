#ifndef TURAN_COUNTING_HPP
#define TURAN_COUNTING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/graph.hpp"

// Exact copy counting. Copies are subgraphs (vertex set + edge set), so a
// k-cycle is counted once rather than 2k times and a path once rather than
// twice. Counts are 64-bit; the intended range is k <= 8 with n up to a few
// hundred on sparse inputs and about 128 on dense ones.

namespace turan {

namespace detail {

class CycleCounter {
 public:
  CycleCounter(const Graph& g, int k) : g_(g), k_(k), avail_(static_cast<std::size_t>(k), VertexSet(g.size())) {}

  std::uint64_t run() {
    const int n = g_.size();
    std::uint64_t total = 0;
    for (Vertex s = 0; s < n; ++s) {
      start_ = s;
      VertexSet& avail = avail_[0];
      avail = VertexSet::full(n);
      avail.erase_up_to(s);
      VertexSet first = g_.row(s) & avail;
      first.for_each([&](Vertex v1) {
        second_ = v1;
        VertexSet& next = avail_[1];
        next = avail;
        next.reset(v1);
        total += extend(v1, 1);
      });
    }
    return total;
  }

 private:
  // Path start_, second_, ..., v holds depth+1 vertices; avail_[depth] are the
  // vertices still usable.
  std::uint64_t extend(Vertex v, int depth) {
    const VertexSet& avail = avail_[static_cast<std::size_t>(depth)];
    if (depth == k_ - 2) {
      VertexSet last = g_.row(v) & g_.row(start_);
      last &= avail;
      last.erase_up_to(second_);
      return static_cast<std::uint64_t>(last.count());
    }
    std::uint64_t total = 0;
    VertexSet cand = g_.row(v) & avail;
    cand.for_each([&](Vertex w) {
      VertexSet& next = avail_[static_cast<std::size_t>(depth) + 1];
      next = avail;
      next.reset(w);
      total += extend(w, depth + 1);
    });
    return total;
  }

  const Graph& g_;
  int k_;
  std::vector<VertexSet> avail_;
  Vertex start_ = 0;
  Vertex second_ = 0;
};

inline std::uint64_t paths_from(const Graph& g, Vertex v, int k, VertexSet& avail) {
  if (k == 0) return 1;
  VertexSet cand = g.row(v) & avail;
  if (k == 1) return static_cast<std::uint64_t>(cand.count());
  std::uint64_t total = 0;
  cand.for_each([&](Vertex w) {
    avail.reset(w);
    total += paths_from(g, w, k - 1, avail);
    avail.set(w);
  });
  return total;
}

inline void check_vertex(const Graph& g, Vertex v, const char* what) {
  if (v < 0 || v >= g.size()) throw std::out_of_range(std::string(what) + ": vertex out of range");
}

}  // namespace detail

/// Number of k-cycles (unlabelled copies). Each cycle is enumerated once: it
/// starts at its smallest vertex and leaves through the smaller of that
/// vertex's two cycle neighbours.
inline std::uint64_t count_cycle_copies(const Graph& g, int k) {
  if (k < 3) throw std::invalid_argument("count_cycle_copies: need k >= 3");
  if (k > g.size()) return 0;
  return detail::CycleCounter(g, k).run();
}

/// Number of paths with k edges starting at v.
inline std::uint64_t count_paths_from(const Graph& g, Vertex v, int k) {
  detail::check_vertex(g, v, "count_paths_from");
  if (k < 0) throw std::invalid_argument("count_paths_from: negative length");
  VertexSet avail = VertexSet::full(g.size());
  avail.reset(v);
  return detail::paths_from(g, v, k, avail);
}

/// Number of copies of P_k (k edges).
inline std::uint64_t count_path_copies(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("count_path_copies: need k >= 1");
  std::uint64_t total = 0;
  for (Vertex v = 0; v < g.size(); ++v) total += count_paths_from(g, v, k);
  return total / 2;
}

inline std::uint64_t count_triangles(const Graph& g) { return count_cycle_copies(g, 3); }

// ---------------------------------------------------------------------------
// Class-ordered paths and cycles.

/// Bit rows for an ordered list of vertex classes; throws on overlap.
inline std::vector<VertexSet> class_sets(const Graph& g, std::span<const std::vector<Vertex>> classes) {
  std::vector<VertexSet> out;
  VertexSet seen(g.size());
  for (const auto& cls : classes) {
    VertexSet s(g.size());
    for (Vertex v : cls) {
      detail::check_vertex(g, v, "class_sets");
      if (seen.test(v)) throw std::invalid_argument("partition classes overlap at vertex " + std::to_string(v));
      seen.set(v);
      s.set(v);
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<VertexSet> class_sets(const Graph& g, const VertexPartition& part) {
  if (part.vertex_count() != g.size()) throw std::invalid_argument("partition does not match graph size");
  auto cls = part.classes();
  return class_sets(g, cls);
}

namespace detail {

inline void require_disjoint(std::span<const VertexSet> classes) {
  if (classes.empty()) return;
  VertexSet seen(classes[0].universe());
  for (const auto& c : classes) {
    if (seen.intersects(c)) throw std::invalid_argument("partition classes overlap");
    seen |= c;
  }
}

// weight[v] for v in classes[from..] propagated along the class order.
inline void propagate(const Graph& g, std::span<const VertexSet> classes, std::size_t from, std::vector<std::uint64_t>& weight) {
  for (std::size_t i = from; i + 1 < classes.size(); ++i) {
    classes[i + 1].for_each([&](Vertex w) {
      std::uint64_t sum = 0;
      VertexSet back = g.row(w) & classes[i];
      back.for_each([&](Vertex u) { sum += weight[static_cast<std::size_t>(u)]; });
      weight[static_cast<std::size_t>(w)] = sum;
    });
  }
}

}  // namespace detail

/// p(U_1,...,U_s): paths u_1...u_s with u_i in U_i. Layered dynamic
/// programming; disjointness makes every layered walk a path.
inline std::uint64_t partition_path_count(const Graph& g, std::span<const VertexSet> classes) {
  detail::require_disjoint(classes);
  if (classes.empty()) return 0;
  for (const auto& c : classes)
    if (c.none()) return 0;
  std::vector<std::uint64_t> weight(static_cast<std::size_t>(g.size()), 0);
  classes[0].for_each([&](Vertex v) { weight[static_cast<std::size_t>(v)] = 1; });
  detail::propagate(g, classes, 0, weight);
  std::uint64_t total = 0;
  classes.back().for_each([&](Vertex v) { total += weight[static_cast<std::size_t>(v)]; });
  return total;
}

inline std::uint64_t partition_path_count(const Graph& g, std::span<const std::vector<Vertex>> classes) {
  return partition_path_count(g, class_sets(g, classes));
}

inline std::uint64_t partition_path_count(const Graph& g, std::initializer_list<std::vector<Vertex>> classes) {
  return partition_path_count(g, std::span<const std::vector<Vertex>>(classes.begin(), classes.size()));
}

/// c(U_1,...,U_s): cycles u_1...u_s u_1 with u_i in U_i, s >= 3.
inline std::uint64_t partition_cycle_count(const Graph& g, std::span<const VertexSet> classes) {
  if (classes.size() < 3) throw std::invalid_argument("partition_cycle_count: need at least 3 classes");
  detail::require_disjoint(classes);
  for (const auto& c : classes)
    if (c.none()) return 0;
  std::vector<std::uint64_t> weight(static_cast<std::size_t>(g.size()), 0);
  std::uint64_t total = 0;
  classes[0].for_each([&](Vertex u1) {
    VertexSet start = g.row(u1) & classes[1];
    classes[1].for_each([&](Vertex v) { weight[static_cast<std::size_t>(v)] = start.test(v) ? 1 : 0; });
    detail::propagate(g, classes, 1, weight);
    VertexSet close = g.row(u1) & classes.back();
    close.for_each([&](Vertex v) { total += weight[static_cast<std::size_t>(v)]; });
  });
  return total;
}

inline std::uint64_t partition_cycle_count(const Graph& g, std::span<const std::vector<Vertex>> classes) {
  return partition_cycle_count(g, class_sets(g, classes));
}

inline std::uint64_t partition_cycle_count(const Graph& g, std::initializer_list<std::vector<Vertex>> classes) {
  return partition_cycle_count(g, std::span<const std::vector<Vertex>>(classes.begin(), classes.size()));
}

/// e(X, Y) for disjoint X, Y.
inline std::int64_t edges_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  std::int64_t e = 0;
  x.for_each([&](Vertex v) { e += g.degree_into(v, y); });
  return e;
}

// ---------------------------------------------------------------------------
// Path search.

namespace detail {

class PathSearch {
 public:
  PathSearch(const Graph& g, int length) : g_(g), length_(length) {}

  // Simple path of exactly `length_` edges from `from` to `to`, avoiding
  // `blocked`. Fills path_ on success.
  bool between(Vertex from, Vertex to, const VertexSet& blocked) {
    target_ = to;
    dist_ = bfs_distances(to, blocked);
    if (dist_[static_cast<std::size_t>(from)] < 0 || dist_[static_cast<std::size_t>(from)] > length_) return false;
    if (length_ == 0) {
      path_ = {from};
      return from == to;
    }
    VertexSet avail = VertexSet::full(g_.size()) - blocked;
    avail.reset(from);
    path_.assign(1, from);
    return extend(from, length_, avail);
  }

  const std::vector<Vertex>& path() const { return path_; }

 private:
  std::vector<int> bfs_distances(Vertex root, const VertexSet& blocked) const {
    std::vector<int> dist(static_cast<std::size_t>(g_.size()), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    VertexSet frontier(g_.size());
    frontier.set(root);
    VertexSet seen = blocked;
    seen.set(root);
    int d = 0;
    while (frontier.any()) {
      VertexSet next(g_.size());
      frontier.for_each([&](Vertex v) { next |= g_.row(v); });
      next -= seen;
      ++d;
      next.for_each([&](Vertex v) { dist[static_cast<std::size_t>(v)] = d; });
      seen |= next;
      frontier = std::move(next);
    }
    return dist;
  }

  bool extend(Vertex v, int remaining, VertexSet& avail) {
    if (remaining == 1) {
      if (g_.has_edge(v, target_) && avail.test(target_)) {
        path_.push_back(target_);
        return true;
      }
      return false;
    }
    VertexSet cand = g_.row(v) & avail;
    cand.reset(target_);
    for (Vertex w = cand.first(); w >= 0; w = cand.next(w + 1)) {
      const int d = dist_[static_cast<std::size_t>(w)];
      if (d < 0 || d > remaining - 1) continue;
      avail.reset(w);
      path_.push_back(w);
      if (extend(w, remaining - 1, avail)) return true;
      path_.pop_back();
      avail.set(w);
    }
    return false;
  }

  const Graph& g_;
  int length_;
  Vertex target_ = 0;
  std::vector<int> dist_;
  std::vector<Vertex> path_;
};

}  // namespace detail

/// A simple path with exactly `length` edges from u to v, if one exists.
inline std::optional<std::vector<Vertex>> find_path_between(const Graph& g, Vertex u, Vertex v, int length) {
  detail::check_vertex(g, u, "find_path_between");
  detail::check_vertex(g, v, "find_path_between");
  if (length < 0 || length >= g.size() || (u == v) != (length == 0)) return std::nullopt;
  detail::PathSearch search(g, length);
  if (search.between(u, v, VertexSet(g.size()))) return search.path();
  return std::nullopt;
}

inline bool has_path_between(const Graph& g, Vertex u, Vertex v, int length) {
  return find_path_between(g, u, v, length).has_value();
}

/// Whether adding {u,v} to g would close a cycle of length `cycle_length`.
inline bool closes_cycle(const Graph& g, Vertex u, Vertex v, int cycle_length) {
  return has_path_between(g, u, v, cycle_length - 1);
}

/// Any simple path with `length` edges.
inline std::optional<std::vector<Vertex>> find_path(const Graph& g, int length) {
  if (length < 0 || length >= g.size()) return std::nullopt;
  std::vector<Vertex> path;
  VertexSet avail = VertexSet::full(g.size());
  auto extend = [&](auto&& self, Vertex v, int remaining) -> bool {
    if (remaining == 0) return true;
    VertexSet cand = g.row(v) & avail;
    for (Vertex w = cand.first(); w >= 0; w = cand.next(w + 1)) {
      avail.reset(w);
      path.push_back(w);
      if (self(self, w, remaining - 1)) return true;
      path.pop_back();
      avail.set(w);
    }
    return false;
  };
  for (Vertex s = 0; s < g.size(); ++s) {
    path.assign(1, s);
    avail.reset(s);
    if (extend(extend, s, length)) return path;
    avail.set(s);
  }
  return std::nullopt;
}

}  // namespace turan

#endif  // TURAN_COUNTING_HPP
