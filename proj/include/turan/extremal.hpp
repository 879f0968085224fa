#ifndef TURAN_EXTREMAL_HPP
#define TURAN_EXTREMAL_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "turan/cycles.hpp"
#include "turan/errors.hpp"
#include "turan/graph.hpp"
#include "turan/pattern.hpp"
#include "turan/random.hpp"

// Generalized Turan numbers ex(n, T, {C_l : l in L}) at small n.

namespace turan {

struct ExtremalRecord {
  int n = 0;
  Pattern target;
  std::vector<int> forbidden;
  std::uint64_t value = 0;
  bool exact = false;
  Graph witness;
  std::string method;
  std::uint64_t nodes = 0;  // search nodes (brute force) or accepted moves (hill climb)
  double seconds = 0.0;     // informational only; not part of serialized output
};

/// Re-checks a record: the witness is free of every forbidden cycle and has
/// exactly `value` target copies.
inline bool verify_record(const ExtremalRecord& r) {
  if (r.witness.size() != r.n) return false;
  if (!is_L_free(r.witness, r.forbidden)) return false;
  return r.target.count_in(r.witness) == r.value;
}

namespace detail {

// Graphs on at most 32 vertices as one adjacency mask per vertex.
struct MaskGraph {
  int n = 0;
  std::array<std::uint32_t, 32> row{};

  bool has(int u, int v) const { return row[static_cast<std::size_t>(u)] >> v & 1U; }
  void add(int u, int v) {
    row[static_cast<std::size_t>(u)] |= 1U << v;
    row[static_cast<std::size_t>(v)] |= 1U << u;
  }
  void remove(int u, int v) {
    row[static_cast<std::size_t>(u)] &= ~(1U << v);
    row[static_cast<std::size_t>(v)] &= ~(1U << u);
  }

  Graph to_graph() const {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (has(u, v)) g.add_edge(u, v);
    return g;
  }
};

// Is there a path with `remaining` edges from x to target using only `avail`?
inline bool mask_path(const MaskGraph& g, int x, int target, int remaining, std::uint32_t avail) {
  if (remaining == 1) return g.has(x, target);
  std::uint32_t cand = g.row[static_cast<std::size_t>(x)] & avail;
  while (cand) {
    const int w = std::countr_zero(cand);
    cand &= cand - 1;
    if (mask_path(g, w, target, remaining - 1, avail & ~(1U << w))) return true;
  }
  return false;
}

inline bool mask_closes_cycle(const MaskGraph& g, int u, int v, int length) {
  if (length > g.n) return false;
  const std::uint32_t all = g.n == 32 ? ~0U : (1U << g.n) - 1;
  return mask_path(g, u, v, length - 1, all & ~(1U << u) & ~(1U << v));
}

inline std::uint64_t mask_cycles_from(const MaskGraph& g, int start, int second, int x, int remaining, std::uint32_t avail) {
  if (remaining == 1) {
    std::uint32_t last = g.row[static_cast<std::size_t>(x)] & g.row[static_cast<std::size_t>(start)] & avail;
    last &= ~((2U << second) - 1);
    return static_cast<std::uint64_t>(std::popcount(last));
  }
  std::uint64_t total = 0;
  std::uint32_t cand = g.row[static_cast<std::size_t>(x)] & avail;
  while (cand) {
    const int w = std::countr_zero(cand);
    cand &= cand - 1;
    total += mask_cycles_from(g, start, second, w, remaining - 1, avail & ~(1U << w));
  }
  return total;
}

inline std::uint64_t mask_count_cycles(const MaskGraph& g, int k) {
  std::uint64_t total = 0;
  const std::uint32_t all = g.n == 32 ? ~0U : (1U << g.n) - 1;
  for (int s = 0; s + k <= g.n; ++s) {
    const std::uint32_t above = all & ~((2U << s) - 1);
    std::uint32_t first = g.row[static_cast<std::size_t>(s)] & above;
    while (first) {
      const int v1 = std::countr_zero(first);
      first &= first - 1;
      total += mask_cycles_from(g, s, v1, v1, k - 2, above & ~(1U << v1));
    }
  }
  return total;
}

inline std::uint64_t mask_paths_from(const MaskGraph& g, int x, int remaining, std::uint32_t avail) {
  const std::uint32_t cand = g.row[static_cast<std::size_t>(x)] & avail;
  if (remaining == 1) return static_cast<std::uint64_t>(std::popcount(cand));
  std::uint64_t total = 0;
  std::uint32_t c = cand;
  while (c) {
    const int w = std::countr_zero(c);
    c &= c - 1;
    total += mask_paths_from(g, w, remaining - 1, avail & ~(1U << w));
  }
  return total;
}

inline std::uint64_t mask_count_paths(const MaskGraph& g, int k) {
  const std::uint32_t all = g.n == 32 ? ~0U : (1U << g.n) - 1;
  std::uint64_t total = 0;
  for (int v = 0; v < g.n; ++v) total += mask_paths_from(g, v, k, all & ~(1U << v));
  return total / 2;
}

inline std::uint64_t mask_count(const MaskGraph& g, const Pattern& t) {
  if (t.vertex_count() > g.n) return 0;
  return t.kind == Pattern::Kind::cycle ? mask_count_cycles(g, t.length) : mask_count_paths(g, t.length);
}

class BruteForce {
 public:
  BruteForce(int n, Pattern target, std::vector<int> forbidden) : target_(target), forbidden_(std::move(forbidden)) {
    g_.n = n;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
    // Lengths above n can never close.
    std::erase_if(forbidden_, [n](int l) { return l > n; });
    excluded_.reserve(pairs_.size());
  }

  void run() {
    MaskGraph upper = g_;
    for (auto [u, v] : pairs_) upper.add(u, v);
    search(0, upper);
  }

  bool found() const { return found_; }
  std::uint64_t best() const { return best_; }
  const MaskGraph& witness() const { return witness_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool closes(int u, int v) const {
    for (int l : forbidden_)
      if (mask_closes_cycle(g_, u, v, l)) return true;
    return false;
  }

  // `upper` = current graph plus every undecided pair; its target count
  // bounds every completion.
  void search(std::size_t index, MaskGraph& upper) {
    ++nodes_;
    if (found_ && mask_count(upper, target_) <= best_) return;
    if (index == pairs_.size()) {
      leaf();
      return;
    }
    const auto [u, v] = pairs_[index];
    if (!closes(u, v)) {
      g_.add(u, v);
      search(index + 1, upper);
      g_.remove(u, v);
    }
    upper.remove(u, v);
    excluded_.push_back(pairs_[index]);
    search(index + 1, upper);
    excluded_.pop_back();
    upper.add(u, v);
  }

  void leaf() {
    const std::uint64_t value = mask_count(g_, target_);
    if (found_ && value <= best_) return;
    // Only edge-maximal graphs count; a non-maximal one is dominated by the
    // maximal graph obtained by completing it.
    for (auto [u, v] : excluded_)
      if (!closes(u, v)) return;
    found_ = true;
    best_ = value;
    witness_ = g_;
  }

  MaskGraph g_;
  Pattern target_;
  std::vector<int> forbidden_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::pair<int, int>> excluded_;
  bool found_ = false;
  std::uint64_t best_ = 0;
  MaskGraph witness_;
  std::uint64_t nodes_ = 0;
};

inline void check_forbidden(std::span<const int> forbidden) {
  for (int l : forbidden)
    if (l < 3) throw std::invalid_argument("forbidden cycle lengths must be at least 3");
}

}  // namespace detail

inline constexpr int kBruteForceDefaultLimit = 8;

/// Exact ex(n, target, {C_l : l in forbidden}) by depth-first search over
/// edge decisions in lexicographic pair order. Adding an edge that closes a
/// forbidden cycle is pruned, branches whose optimistic completion cannot
/// beat the incumbent are cut, and only edge-maximal leaves are scored.
inline ExtremalRecord brute_force_ex(int n, const Pattern& target, std::vector<int> forbidden, int limit = kBruteForceDefaultLimit) {
  if (n < 0) throw std::invalid_argument("brute_force_ex: negative n");
  if (limit > 32) throw std::invalid_argument("brute_force_ex: limit cannot exceed 32");
  if (n > limit) throw LimitExceeded("brute_force_ex: n = " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  detail::check_forbidden(forbidden);
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());

  const auto t0 = std::chrono::steady_clock::now();
  detail::BruteForce search(n, target, forbidden);
  search.run();
  ExtremalRecord rec;
  rec.n = n;
  rec.target = target;
  rec.forbidden = forbidden;
  rec.value = search.best();
  rec.exact = true;
  rec.witness = search.witness().to_graph();
  rec.method = "brute-force";
  rec.nodes = search.nodes();
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

inline ExtremalRecord brute_force_ex(int n, const Pattern& target, std::initializer_list<int> forbidden, int limit = kBruteForceDefaultLimit) {
  return brute_force_ex(n, target, std::vector<int>(forbidden), limit);
}

struct HillClimbOptions {
  int steps = 20000;
  int restarts = 4;
  double downhill = 0.01;  // probability of taking a move that lowers the count
};

/// Stochastic lower bound. Each restart begins at the empty graph and
/// applies random add / remove / swap moves that keep the graph free of the
/// forbidden cycles, accepting a move when the target count does not drop
/// (or, with probability `downhill`, when it does).
inline ExtremalRecord hill_climb_ex(int n, const Pattern& target, std::vector<int> forbidden, HillClimbOptions opts, Rng& rng) {
  if (n < 0) throw std::invalid_argument("hill_climb_ex: negative n");
  if (opts.steps < 0 || opts.restarts < 1 || opts.downhill < 0 || opts.downhill > 1) throw std::invalid_argument("hill_climb_ex: bad step, restart or downhill setting");
  detail::check_forbidden(forbidden);
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());

  const auto t0 = std::chrono::steady_clock::now();
  ExtremalRecord rec;
  rec.n = n;
  rec.target = target;
  rec.forbidden = forbidden;
  rec.method = "hill-climb";
  rec.witness = Graph(n);
  rec.value = target.count_in(rec.witness);

  auto addable = [&](const Graph& g, Vertex u, Vertex v) {
    if (u == v || g.has_edge(u, v)) return false;
    for (int l : forbidden)
      if (l <= n && closes_cycle(g, u, v, l)) return false;
    return true;
  };
  auto random_pair = [&]() {
    const auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n - 1)));
    if (v >= u) ++v;
    return std::pair{u, v};
  };
  auto random_edge = [&](const Graph& g) {
    auto edges = g.edges();
    return edges[rng.below(edges.size())];
  };

  if (n >= 2) {
    for (int r = 0; r < opts.restarts; ++r) {
      Graph g(n);
      std::uint64_t value = target.count_in(g);
      for (int step = 0; step < opts.steps; ++step) {
        Graph next = g;
        const auto move = rng.below(3);
        if (move == 0 || g.edge_count() == 0) {
          auto [u, v] = random_pair();
          if (!addable(next, u, v)) continue;
          next.add_edge(u, v);
        } else if (move == 1) {
          auto [u, v] = random_edge(g);
          next.remove_edge(u, v);
        } else {
          auto [u, v] = random_edge(g);
          next.remove_edge(u, v);
          auto [x, y] = random_pair();
          if (!addable(next, x, y)) continue;
          next.add_edge(x, y);
        }
        const std::uint64_t next_value = target.count_in(next);
        if (next_value < value && !rng.bernoulli(opts.downhill)) continue;
        g = std::move(next);
        value = next_value;
        ++rec.nodes;
        if (value > rec.value) {
          rec.value = value;
          rec.witness = g;
        }
      }
    }
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

inline ExtremalRecord hill_climb_ex(int n, const Pattern& target, std::initializer_list<int> forbidden, HillClimbOptions opts, Rng& rng) {
  return hill_climb_ex(n, target, std::vector<int>(forbidden), opts, rng);
}

}  // namespace turan

#endif  // TURAN_EXTREMAL_HPP
