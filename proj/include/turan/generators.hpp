#ifndef TURAN_GENERATORS_HPP
#define TURAN_GENERATORS_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "turan/counting.hpp"
#include "turan/graph.hpp"
#include "turan/random.hpp"

// Random instance generators for the verification suites.

namespace turan {

/// Erdos-Renyi G(n, p).
inline Graph random_graph(int n, double p, Rng& rng) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

/// Random greedy insertion: visit all pairs in random order and add each one
/// with probability `keep` unless it would close a cycle whose length is in
/// `forbidden`. With keep = 1 the result is edge-maximal.
inline Graph random_free_graph(int n, std::span<const int> forbidden, double keep, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  rng.shuffle(pairs);
  Graph g(n);
  for (auto [u, v] : pairs) {
    if (!rng.bernoulli(keep)) continue;
    bool ok = true;
    for (int l : forbidden)
      if (l <= n && closes_cycle(g, u, v, l)) {
        ok = false;
        break;
      }
    if (ok) g.add_edge(u, v);
  }
  return g;
}

inline Graph random_free_graph(int n, std::initializer_list<int> forbidden, double keep, Rng& rng) {
  return random_free_graph(n, std::span<const int>(forbidden.begin(), forbidden.size()), keep, rng);
}

/// Same idea on a bipartite host with sides a and b; only even lengths can
/// close.
inline BipartiteGraph random_free_bipartite(int a, int b, std::span<const int> forbidden, double keep, Rng& rng) {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y) pairs.emplace_back(x, y);
  rng.shuffle(pairs);
  BipartiteGraph bip(a, b);
  Graph g(a + b);
  for (auto [x, y] : pairs) {
    if (!rng.bernoulli(keep)) continue;
    bool ok = true;
    for (int l : forbidden)
      if (l % 2 == 0 && l <= a + b && closes_cycle(g, x, a + y, l)) {
        ok = false;
        break;
      }
    if (ok) {
      bip.add_edge(x, y);
      g.add_edge(x, a + y);
    }
  }
  return bip;
}

/// Even lengths 4, 6, ..., 2l.
inline std::vector<int> even_lengths_up_to(int two_l) {
  std::vector<int> out;
  for (int t = 4; t <= two_l; t += 2) out.push_back(t);
  return out;
}

}  // namespace turan

#endif  // TURAN_GENERATORS_HPP
