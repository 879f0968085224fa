#ifndef TURAN_CONSTRUCTIONS_HPP
#define TURAN_CONSTRUCTIONS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "turan/cycles.hpp"
#include "turan/generators.hpp"
#include "turan/graph.hpp"
#include "turan/pattern.hpp"
#include "turan/prime_field.hpp"

// Lower-bound constructions: polarity graphs, blow-ups of cycles and paths,
// the triangle booster and the hard instances for one-sided testing.

namespace turan {

// ---------------------------------------------------------------------------
// Polarity graph.

struct PolarityGraph {
  Graph graph;
  int loops = 0;  // points with a^2 + b^2 = 1, whose loop was dropped
};

/// Vertices are the nonzero pairs (a, b) over F_p, indexed a*p + b - 1;
/// (a, b) ~ (c, d) iff ac + bd = 1.
inline PolarityGraph build_polarity_graph(int p) {
  if (p < 3) throw std::invalid_argument("polarity graph needs p >= 3");
  const PrimeField field(p);
  const int n = p * p - 1;
  PolarityGraph out{Graph(n), 0};
  for (int u = 0; u < n; ++u) {
    const int a = (u + 1) / p;
    const int b = (u + 1) % p;
    if (field.add(field.mul(a, a), field.mul(b, b)) == 1) ++out.loops;
    for (int v = u + 1; v < n; ++v) {
      const int c = (v + 1) / p;
      const int d = (v + 1) % p;
      if (field.add(field.mul(a, c), field.mul(b, d)) == 1) out.graph.add_edge(u, v);
    }
  }
  return out;
}

inline Graph polarity_graph(int p) { return build_polarity_graph(p).graph; }

// ---------------------------------------------------------------------------
// Blow-ups of patterns.

/// Positions of the maximum independent set used for blowing up:
/// {k-1, k-3, ...} for C_k (0-based), {k, k-2, ...} for P_k.
inline std::vector<int> pattern_independent_positions(const Pattern& t) {
  std::vector<int> out;
  const int top = t.kind == Pattern::Kind::cycle ? t.length - 1 : t.length;
  for (int i = 0; i < t.independence_number(); ++i) out.push_back(top - 2 * i);
  return out;
}

/// Splits `total` into `parts` near-equal pieces, lower indices first.
inline std::vector<int> balanced_split(int total, int parts) {
  if (parts < 1) throw std::invalid_argument("balanced_split: need at least one part");
  std::vector<int> out(static_cast<std::size_t>(parts), total / parts);
  for (int i = 0; i < total % parts; ++i) ++out[static_cast<std::size_t>(i)];
  return out;
}

namespace detail {

inline BlowUp blow_up_independent(const Pattern& t, int m) {
  std::vector<int> sizes(static_cast<std::size_t>(t.vertex_count()), 1);
  for (int pos : pattern_independent_positions(t)) sizes[static_cast<std::size_t>(pos)] = m;
  return blow_up(t.graph(), sizes);
}

inline void check_blowup_lengths(int l, int m) {
  if (l < 3) throw std::invalid_argument("forbidden cycle length must be at least 3");
  if (l == 4) throw std::invalid_argument("forbidden cycle length 4 is excluded");
  if (m < 1) throw std::invalid_argument("blow-up size m must be positive");
}

}  // namespace detail

/// C_k with a maximum independent set blown up to m vertices per class;
/// floor(k/2) m + ceil(k/2) vertices, C_l-free.
inline Graph cycle_blowup(int k, int l, int m) {
  if (k < 3) throw std::invalid_argument("cycle_blowup: need k >= 3");
  if (k == l) throw std::invalid_argument("cycle_blowup: k and l must differ");
  detail::check_blowup_lengths(l, m);
  return detail::blow_up_independent(Pattern::cycle(k), m).graph;
}

/// P_k with a maximum independent set blown up to m vertices per class.
inline Graph path_blowup(int k, int l, int m) {
  if (k < 2) throw std::invalid_argument("path_blowup: need k >= 2");
  detail::check_blowup_lengths(l, m);
  return detail::blow_up_independent(Pattern::path(k), m).graph;
}

/// Class sizes used by general_blowup, in pattern vertex order.
inline std::vector<int> general_blowup_sizes(const Pattern& target, int forbidden, int n) {
  if (forbidden < 3) throw std::invalid_argument("general_blowup: forbidden cycle length must be at least 3");
  const int budget = forbidden - forbidden / 2 - 1;  // h - alpha(C_h) - 1
  const int alpha = target.independence_number();
  const int others = target.vertex_count() - alpha;
  if (budget < others)
    throw std::invalid_argument("general_blowup: need h - alpha(C_h) - 1 >= t - alpha(T) (" + std::to_string(budget) +
                                " < " + std::to_string(others) + ")");
  if (n < budget + alpha)
    throw std::invalid_argument("general_blowup: need n >= " + std::to_string(budget + alpha));
  const auto independent = pattern_independent_positions(target);
  std::vector<char> in_set(static_cast<std::size_t>(target.vertex_count()), 0);
  for (int pos : independent) in_set[static_cast<std::size_t>(pos)] = 1;
  const auto small = balanced_split(budget, others);
  const auto large = balanced_split(n - budget, alpha);
  std::vector<int> sizes(static_cast<std::size_t>(target.vertex_count()));
  std::size_t si = 0;
  std::size_t li = 0;
  for (int v = 0; v < target.vertex_count(); ++v)
    sizes[static_cast<std::size_t>(v)] = in_set[static_cast<std::size_t>(v)] ? large[li++] : small[si++];
  return sizes;
}

/// Blow-up of the target with h - alpha(C_h) - 1 vertices spread over the
/// positions outside a maximum independent set and the rest over the set.
inline Graph general_blowup(const Pattern& target, int forbidden, int n) {
  return blow_up(target.graph(), general_blowup_sizes(target, forbidden, n)).graph;
}

// ---------------------------------------------------------------------------
// Triangle booster.

/// Replaces every vertex of side A by an edge: A vertex i becomes 2i, 2i+1,
/// B vertex j becomes 2|A| + j. Input must be {C_4, ..., C_2l}-free.
inline Graph triangle_booster(const BipartiteGraph& gprime, int l) {
  if (l < 3) throw std::invalid_argument("triangle_booster: need l >= 3");
  {
    const Graph host = gprime.to_graph();
    CycleOracle oracle(host);
    for (int t = 4; t <= 2 * l; t += 2)
      if (oracle.contains(t))
        throw std::invalid_argument("triangle_booster: input contains C" + std::to_string(t));
  }
  const int a = gprime.side_a();
  Graph g(2 * a + gprime.side_b());
  for (int i = 0; i < a; ++i) {
    g.add_edge(2 * i, 2 * i + 1);
    gprime.row(i).for_each([&](Vertex j) {
      g.add_edge(2 * i, 2 * a + j);
      g.add_edge(2 * i + 1, 2 * a + j);
    });
  }
  return g;
}

// ---------------------------------------------------------------------------
// Hard L-free instances.

/// Balanced blow-up of C_{l+2} on n vertices, or on n - 1 vertices plus an
/// isolated vertex (the last one).
inline Graph hard_L_free_instance(int l, int n, bool with_isolated) {
  if (l < 3 || l % 2 == 0) throw std::invalid_argument("hard_L_free_instance: l must be odd and at least 3");
  const int body = with_isolated ? n - 1 : n;
  if (body < l + 2) throw std::invalid_argument("hard_L_free_instance: need n >= l + 2" + std::string(with_isolated ? " + 1" : ""));
  Graph blown = blow_up(cycle_graph(l + 2), balanced_split(body, l + 2)).graph;
  if (!with_isolated) return blown;
  Graph g(n);
  for (auto [u, v] : blown.edges()) g.add_edge(u, v);
  return g;
}

// ---------------------------------------------------------------------------
// Named constructions.

enum class ConstructionFamily { polarity, cycle_blowup, path_blowup, general_blowup, triangle_booster, hard_L_free };

inline std::string_view family_name(ConstructionFamily f) {
  switch (f) {
    case ConstructionFamily::polarity:
      return "polarity";
    case ConstructionFamily::cycle_blowup:
      return "cycle-blowup";
    case ConstructionFamily::path_blowup:
      return "path-blowup";
    case ConstructionFamily::general_blowup:
      return "general-blowup";
    case ConstructionFamily::triangle_booster:
      return "triangle-booster";
    case ConstructionFamily::hard_L_free:
      return "hard-L-free";
  }
  return "unknown";
}

inline ConstructionFamily parse_family(std::string_view name) {
  for (auto f : {ConstructionFamily::polarity, ConstructionFamily::cycle_blowup, ConstructionFamily::path_blowup,
                 ConstructionFamily::general_blowup, ConstructionFamily::triangle_booster, ConstructionFamily::hard_L_free})
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown construction family '" + std::string(name) + "'");
}

/// A family tag plus the parameters it reads. Unused fields are ignored.
/// For the triangle booster the input bipartite graph is drawn by random
/// greedy insertion on sides a x b using `seed`.
struct ConstructionSpec {
  ConstructionFamily family = ConstructionFamily::polarity;
  int p = 0;
  int k = 0;
  int l = 0;
  int m = 0;
  int n = 0;
  int a = 0;
  int b = 0;
  std::uint64_t seed = 0;
  bool with_isolated = false;
  Pattern target = Pattern::cycle(3);
};

/// Bipartite input used by the triangle booster for a spec.
inline BipartiteGraph booster_input(const ConstructionSpec& spec) {
  if (spec.a < 0 || spec.b < 0) throw std::invalid_argument("triangle-booster: sides must be nonnegative");
  Rng rng(spec.seed);
  const auto lengths = even_lengths_up_to(2 * spec.l);
  return random_free_bipartite(spec.a, spec.b, lengths, 1.0, rng);
}

inline Graph build(const ConstructionSpec& spec) {
  switch (spec.family) {
    case ConstructionFamily::polarity:
      return polarity_graph(spec.p);
    case ConstructionFamily::cycle_blowup:
      return cycle_blowup(spec.k, spec.l, spec.m);
    case ConstructionFamily::path_blowup:
      return path_blowup(spec.k, spec.l, spec.m);
    case ConstructionFamily::general_blowup:
      return general_blowup(spec.target, spec.l, spec.n);
    case ConstructionFamily::triangle_booster:
      if (spec.l < 3) throw std::invalid_argument("triangle_booster: need l >= 3");
      return triangle_booster(booster_input(spec), spec.l);
    case ConstructionFamily::hard_L_free:
      return hard_L_free_instance(spec.l, spec.n, spec.with_isolated);
  }
  throw std::invalid_argument("unknown construction family");
}

}  // namespace turan

#endif  // TURAN_CONSTRUCTIONS_HPP
