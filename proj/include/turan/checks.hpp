#ifndef TURAN_CHECKS_HPP
#define TURAN_CHECKS_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "turan/counting.hpp"
#include "turan/cycles.hpp"
#include "turan/errors.hpp"
#include "turan/graph.hpp"
#include "turan/odd_cycle_sets.hpp"

// Mechanical checks of explicit inequalities. Each check evaluates both sides
// exactly (integers where the bound is an integer, long double otherwise) and
// records the instance so failures can be replayed.

namespace turan {

enum class CheckStatus { pass, fail, not_applicable };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::not_applicable:
      return "not-applicable";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  std::string instance;
  std::string relation = "<=";  // "<=" or "=="
  double lhs = 0;
  double rhs = 0;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  std::optional<Graph> counterexample;

  bool passed() const { return status == CheckStatus::pass; }
  bool failed() const { return status == CheckStatus::fail; }
};

namespace detail {

inline std::string describe(const Graph& g) {
  return "n=" + std::to_string(g.size()) + " e=" + std::to_string(g.edge_count());
}

inline std::string describe_classes(std::span<const VertexSet> classes) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out << (i ? " | " : "");
    bool first = true;
    classes[i].for_each([&](Vertex v) {
      out << (first ? "" : ",") << v;
      first = false;
    });
  }
  out << "]";
  return out.str();
}

inline void finish(CheckResult& r, bool ok, const Graph& g) {
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  if (!ok) r.counterexample = g;
}

inline void require_free(const Graph& g, int length, const char* check) {
  if (length <= g.size() && contains_cycle_of_length(g, length))
    throw PreconditionFailed(std::string(check) + ": graph contains C" + std::to_string(length));
}

inline long double ipow(long double base, int e) {
  long double r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// Largest k^n the partition-identity check will enumerate.
inline constexpr std::uint64_t kPartitionIdentityBudget = 390625;  // 5^8

/// Sum over all k^n class assignments of c(U_1..U_k) equals #C_k * 2k * k^(n-k),
/// and the sum of p(U_1..U_k) equals #P_{k-1} * 2 * k^(n-k).
inline CheckResult check_random_partition_identity(const Graph& g, int k, std::uint64_t budget = kPartitionIdentityBudget) {
  if (k < 3) throw std::invalid_argument("partition identity: need k >= 3");
  const int n = g.size();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(k);
    if (total > budget) throw LimitExceeded("partition identity: k^n exceeds the enumeration budget");
  }
  CheckResult r;
  r.name = "partition-identity";
  r.instance = detail::describe(g) + " k=" + std::to_string(k);
  r.relation = "==";

  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  std::vector<VertexSet> classes(static_cast<std::size_t>(k), VertexSet(n));
  std::uint64_t sum_c = 0;
  std::uint64_t sum_p = 0;
  for (std::uint64_t step = 0; step < total; ++step) {
    for (auto& c : classes) c.clear();
    for (Vertex v = 0; v < n; ++v) classes[static_cast<std::size_t>(assign[static_cast<std::size_t>(v)])].set(v);
    sum_c += partition_cycle_count(g, classes);
    sum_p += partition_path_count(g, classes);
    for (std::size_t i = 0; i < assign.size(); ++i) {
      if (++assign[i] < k) break;
      assign[i] = 0;
    }
  }
  std::uint64_t scale = 1;
  for (int i = k; i < n; ++i) scale *= static_cast<std::uint64_t>(k);
  const bool fits = n >= k;
  const std::uint64_t want_c = fits ? count_cycle_copies(g, k) * 2 * static_cast<std::uint64_t>(k) * scale : 0;
  const std::uint64_t want_p = fits ? count_path_copies(g, k - 1) * 2 * scale : 0;
  r.lhs = static_cast<double>(sum_c);
  r.rhs = static_cast<double>(want_c);
  r.detail = "sum_c=" + std::to_string(sum_c) + " want_c=" + std::to_string(want_c) + " sum_p=" + std::to_string(sum_p) +
             " want_p=" + std::to_string(want_p);
  detail::finish(r, sum_c == want_c && sum_p == want_p, g);
  return r;
}

/// c(U_1..U_{2k+1}) <= sum over nonempty independent sets I of C_{2k+1} of
/// prod_{i in I} |U_i|, for C_{2k+3}-free g.
inline CheckResult check_cycle_partition_inequality(const Graph& g, std::span<const VertexSet> classes, int k) {
  if (k < 2) throw std::invalid_argument("cycle partition inequality: need k >= 2");
  const int m = 2 * k + 1;
  if (static_cast<int>(classes.size()) != m)
    throw std::invalid_argument("cycle partition inequality: need exactly 2k+1 classes");
  detail::require_free(g, m + 2, "cycle partition inequality");
  CheckResult r;
  r.name = "consecutive-odd";
  r.instance = detail::describe(g) + " k=" + std::to_string(k) + " classes=" + detail::describe_classes(classes);
  const std::uint64_t lhs = partition_cycle_count(g, classes);
  std::uint64_t rhs = 0;
  for (const auto& set : cycle_independent_sets(m)) {
    std::uint64_t prod = 1;
    for (int i : set) prod *= static_cast<std::uint64_t>(classes[static_cast<std::size_t>(i - 1)].count());
    rhs += prod;
  }
  r.lhs = static_cast<double>(lhs);
  r.rhs = static_cast<double>(rhs);
  detail::finish(r, lhs <= rhs, g);
  return r;
}

inline CheckResult check_cycle_partition_inequality(const Graph& g, const VertexPartition& part, int k) {
  auto classes = class_sets(g, part);
  return check_cycle_partition_inequality(g, classes, k);
}

/// Path bound under the lambda-sparsity hypotheses. Instances violating a
/// hypothesis come back not-applicable.
inline CheckResult check_lambda_path_bound(const Graph& g, std::span<const VertexSet> classes, double lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda path bound: need lambda >= 1");
  const int s = static_cast<int>(classes.size());
  if (s < 2) throw std::invalid_argument("lambda path bound: need at least 2 classes");
  detail::require_disjoint(classes);
  CheckResult r;
  r.name = "lambda-path";
  r.instance = detail::describe(g) + " lambda=" + std::to_string(lambda) + " classes=" + detail::describe_classes(classes);
  const long double lam = lambda;

  auto sparse = [&](const VertexSet& a, const VertexSet& b) {
    return static_cast<long double>(edges_between(g, a, b)) <= lam * (a.count() + b.count());
  };
  bool applicable = sparse(classes[0], classes[1]);
  for (int i = 0; applicable && i + 2 < s; ++i) {
    classes[static_cast<std::size_t>(i)].for_each([&](Vertex u) {
      if (!applicable) return;
      const VertexSet nb = g.row(u) & classes[static_cast<std::size_t>(i) + 1];
      if (!sparse(nb, classes[static_cast<std::size_t>(i) + 2])) applicable = false;
    });
  }
  if (!applicable) {
    r.status = CheckStatus::not_applicable;
    r.detail = "hypothesis fails";
    return r;
  }

  const long double n = g.size();
  const long double u1 = classes[0].count();
  const long double u2 = classes[1].count();
  const long double us = classes.back().count();
  long double rhs = 0;
  if (s % 2 == 1) {
    rhs = std::pow(lam, (s - 1) / 2.0L) * detail::ipow(n, (s - 3) / 2) * (u1 * us + lam * n);
  } else {
    rhs = std::pow(lam, s / 2.0L) * detail::ipow(n, s / 2 - 1) * (u1 + u2);
  }
  const std::uint64_t lhs = partition_path_count(g, classes);
  r.lhs = static_cast<double>(lhs);
  r.rhs = static_cast<double>(rhs);
  if (s % 2 == 0) {
    const long double proof_form = std::pow(lam, s / 2.0L) * detail::ipow(n, s / 2 - 1) * (u1 + us);
    r.detail = "last-class form rhs=" + std::to_string(static_cast<double>(proof_form));
  }
  detail::finish(r, static_cast<long double>(lhs) <= rhs, g);
  return r;
}

enum class CycleFreeMode { even_free, odd_free };

/// c(V_1..V_{2k+1}) <= l^(k-1) n^(k-2) [p(V_1,V_2,V_3,V_4) + p(V_{2k+1},V_1,V_2,V_3)]
/// for C_{2l}-free g (even_free) or C_{2l+1}-free g with l > k (odd_free).
inline CheckResult check_forbidden_cycles_main(const Graph& g, std::span<const VertexSet> classes, int k, int l, CycleFreeMode mode) {
  if (k < 2 || l < 2) throw std::invalid_argument("forbidden cycles bound: need k, l >= 2");
  if (static_cast<int>(classes.size()) != 2 * k + 1)
    throw std::invalid_argument("forbidden cycles bound: need exactly 2k+1 classes");
  if (mode == CycleFreeMode::even_free) {
    detail::require_free(g, 2 * l, "forbidden cycles bound");
  } else {
    if (l <= k) throw PreconditionFailed("forbidden cycles bound: odd-free mode needs l > k");
    detail::require_free(g, 2 * l + 1, "forbidden cycles bound");
  }
  CheckResult r;
  r.name = "forbidden-cycles";
  r.instance = detail::describe(g) + " k=" + std::to_string(k) + " l=" + std::to_string(l) +
               (mode == CycleFreeMode::even_free ? " even-free" : " odd-free") + " classes=" + detail::describe_classes(classes);
  const std::uint64_t lhs = partition_cycle_count(g, classes);
  const std::vector<VertexSet> first4(classes.begin(), classes.begin() + 4);
  const std::vector<VertexSet> wrap{classes.back(), classes[0], classes[1], classes[2]};
  const std::uint64_t paths = partition_path_count(g, first4) + partition_path_count(g, wrap);
  const long double rhs = detail::ipow(l, k - 1) * detail::ipow(g.size(), k - 2) * static_cast<long double>(paths);
  r.lhs = static_cast<double>(lhs);
  r.rhs = static_cast<double>(rhs);
  detail::finish(r, static_cast<long double>(lhs) <= rhs, g);
  return r;
}

/// max_v #P_2(v) <= 4(l-1)n for C_{2l}-free g.
inline CheckResult check_p2_bound(const Graph& g, int l) {
  if (l < 2) throw std::invalid_argument("p2 bound: need l >= 2");
  detail::require_free(g, 2 * l, "p2 bound");
  CheckResult r;
  r.name = "p2";
  r.instance = detail::describe(g) + " l=" + std::to_string(l);
  std::uint64_t best = 0;
  for (Vertex v = 0; v < g.size(); ++v) best = std::max(best, count_paths_from(g, v, 2));
  const std::uint64_t rhs = 4ULL * static_cast<std::uint64_t>(l - 1) * static_cast<std::uint64_t>(g.size());
  r.lhs = static_cast<double>(best);
  r.rhs = static_cast<double>(rhs);
  detail::finish(r, best <= rhs, g);
  return r;
}

/// #C_3 <= (2l-3)/3 e(g) for C_{2l}-free g (compared as 3 #C_3 <= (2l-3) e).
inline CheckResult check_triangle_bound(const Graph& g, int l) {
  if (l < 2) throw std::invalid_argument("triangle bound: need l >= 2");
  detail::require_free(g, 2 * l, "triangle bound");
  CheckResult r;
  r.name = "triangle";
  r.instance = detail::describe(g) + " l=" + std::to_string(l);
  const std::uint64_t t = count_triangles(g);
  const auto e = static_cast<std::uint64_t>(g.edge_count());
  r.lhs = static_cast<double>(t);
  r.rhs = static_cast<double>(2 * l - 3) * static_cast<double>(e) / 3.0;
  detail::finish(r, 3 * t <= static_cast<std::uint64_t>(2 * l - 3) * e, g);
  return r;
}

/// When e(g) > (t-1)/2 n, a path with t edges must exist; passes iff one is
/// found (the path goes into `detail`). Vacuous otherwise.
inline CheckResult check_erdos_gallai(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("Erdos-Gallai: need t >= 1");
  CheckResult r;
  r.name = "erdos-gallai";
  r.instance = detail::describe(g) + " t=" + std::to_string(t);
  const std::int64_t e = g.edge_count();
  r.lhs = static_cast<double>(e);
  r.rhs = (t - 1) / 2.0 * g.size();
  if (2 * e <= static_cast<std::int64_t>(t - 1) * g.size()) {
    r.detail = "vacuous";
    r.status = CheckStatus::pass;
    return r;
  }
  auto path = find_path(g, t);
  if (path) {
    std::string s = "witness";
    for (Vertex v : *path) s += " " + std::to_string(v);
    r.detail = s;
  }
  detail::finish(r, path.has_value(), g);
  return r;
}

/// Zarankiewicz-type bound for C_{2l}-free bipartite graphs with sides
/// n >= m (sides are ordered internally).
inline CheckResult check_zarankiewicz(const BipartiteGraph& bip, int l) {
  if (l < 2) throw std::invalid_argument("Zarankiewicz bound: need l >= 2");
  const Graph g = bip.to_graph();
  detail::require_free(g, 2 * l, "Zarankiewicz bound");
  CheckResult r;
  r.name = "zarankiewicz";
  const long double n = std::max(bip.side_a(), bip.side_b());
  const long double m = std::min(bip.side_a(), bip.side_b());
  r.instance = "sides " + std::to_string(bip.side_a()) + "x" + std::to_string(bip.side_b()) + " e=" +
               std::to_string(bip.edge_count()) + " l=" + std::to_string(l);
  long double rhs = 0;
  if (l % 2 == 1)
    rhs = (2 * l - 3) * (std::pow(n * m, 0.5L + 1.0L / (2 * l)) + 2 * n);
  else
    rhs = (2 * l - 3) * (std::sqrt(n) * std::pow(m, 0.5L + 1.0L / l) + 2 * n);
  r.lhs = static_cast<double>(bip.edge_count());
  r.rhs = static_cast<double>(rhs);
  detail::finish(r, static_cast<long double>(bip.edge_count()) <= rhs, g);
  return r;
}

// ---------------------------------------------------------------------------
// Degree-threshold trimming.

inline constexpr double kTrimmingDefaultSlack = 64.0;

struct TrimmingResult {
  VertexSet y_prime;
  VertexSet z_prime;
  double threshold = 0;
  std::int64_t e_yprime_x = 0;
  std::int64_t e_yprime_z = 0;
  std::int64_t e_zprime_y = 0;
  std::int64_t e_zprime_w = 0;
  std::uint64_t residual_paths = 0;  // p(X, Y - Y', Z - Z', W)
  CheckResult check;
};

/// Degree threshold l n^(2/(l+2)) for even l, l n^(2/(l+1)) for odd l.
inline double trimming_threshold(int n, int l) {
  const double exponent = l % 2 == 0 ? 2.0 / (l + 2) : 2.0 / (l + 1);
  return l * std::pow(static_cast<double>(n), exponent);
}

/// Y' = {y in Y : |N_X(y)| >= d}, Z' = {z in Z : |N_W(z)| >= d}. The check
/// passes when the four edge counts are at most slack*l*n and the residual
/// path count at most slack*l^2*n^2.
inline TrimmingResult find_trimming_sets(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& z,
                                         const VertexSet& w, int l, double slack = kTrimmingDefaultSlack) {
  if (l < 3) throw std::invalid_argument("trimming sets: need l >= 3");
  const std::vector<VertexSet> layers{x, y, z, w};
  detail::require_disjoint(layers);
  for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
    // The bipartite graph between consecutive layers.
    const VertexSet both = layers[i] | layers[i + 1];
    Graph cross(g.size());
    layers[i].for_each([&](Vertex u) { (g.row(u) & layers[i + 1]).for_each([&](Vertex v) { cross.add_edge(u, v); }); });
    const auto members = both.members();
    detail::require_free(induced_subgraph(cross, members), 2 * l, "trimming sets");
  }
  const int n = g.size();
  TrimmingResult out;
  out.threshold = trimming_threshold(n, l);
  out.y_prime = VertexSet(n);
  out.z_prime = VertexSet(n);
  y.for_each([&](Vertex v) {
    if (g.degree_into(v, x) >= out.threshold) out.y_prime.set(v);
  });
  z.for_each([&](Vertex v) {
    if (g.degree_into(v, w) >= out.threshold) out.z_prime.set(v);
  });
  out.e_yprime_x = edges_between(g, out.y_prime, x);
  out.e_yprime_z = edges_between(g, out.y_prime, z);
  out.e_zprime_y = edges_between(g, out.z_prime, y);
  out.e_zprime_w = edges_between(g, out.z_prime, w);
  const std::vector<VertexSet> residual{x, y - out.y_prime, z - out.z_prime, w};
  out.residual_paths = partition_path_count(g, residual);

  CheckResult& r = out.check;
  r.name = "trimming";
  r.instance = detail::describe(g) + " l=" + std::to_string(l) + " |X|,|Y|,|Z|,|W|=" + std::to_string(x.count()) + "," +
               std::to_string(y.count()) + "," + std::to_string(z.count()) + "," + std::to_string(w.count());
  const double edge_cap = slack * l * n;
  const double path_cap = slack * l * l * static_cast<double>(n) * n;
  const std::int64_t worst_edges = std::max({out.e_yprime_x, out.e_yprime_z, out.e_zprime_y, out.e_zprime_w});
  r.lhs = static_cast<double>(out.residual_paths);
  r.rhs = path_cap;
  r.detail = "max trimmed edges=" + std::to_string(worst_edges) + " edge cap=" + std::to_string(edge_cap) +
             " |Y'|=" + std::to_string(out.y_prime.count()) + " |Z'|=" + std::to_string(out.z_prime.count());
  detail::finish(r, static_cast<double>(worst_edges) <= edge_cap && static_cast<double>(out.residual_paths) <= path_cap, g);
  return out;
}

}  // namespace turan

#endif  // TURAN_CHECKS_HPP
