#ifndef TURAN_VERIFICATION_HPP
#define TURAN_VERIFICATION_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "turan/checks.hpp"
#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/errors.hpp"
#include "turan/generators.hpp"
#include "turan/graph.hpp"
#include "turan/property_testing.hpp"
#include "turan/random.hpp"

// Randomized (and, for the partition identity, exhaustive) suites driving the
// check_* functions, plus the exact polarity-graph property report.

namespace turan {

struct SuiteOptions {
  int trials = 10000;      // applicable instances wanted
  bool exhaustive = false; // partition-identity only: every labeled graph on <= 6 vertices
  std::uint64_t seed = 1;
  int attempt_factor = 50; // give up after trials * attempt_factor instances
  double trimming_slack = kTrimmingDefaultSlack;
  double komlos_c = 2.0;
  std::size_t keep_failures = 100;
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  int requested = 0;
  bool exhaustive = false;
  std::int64_t attempts = 0;
  std::int64_t applicable = 0;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::int64_t not_applicable = 0;
  double max_ratio = 0;  // largest lhs / rhs among applicable instances with rhs > 0
  std::vector<CheckResult> failures;

  bool ok() const { return failed == 0 && (exhaustive || applicable >= requested); }
};

inline const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{"partition-identity", "consecutive-odd", "lambda-path", "forbidden-cycles",
                                                   "p2",                 "triangle",        "erdos-gallai", "zarankiewicz",
                                                   "trimming",           "komlos"};
  return names;
}

inline bool is_suite_name(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

namespace detail {

// One instance: nullopt means the generator could not produce an applicable
// instance (counted as not-applicable).
using SuiteInstance = std::function<std::optional<CheckResult>(Rng&, std::int64_t)>;

inline void record(SuiteReport& rep, const CheckResult& r, std::size_t keep) {
  if (r.status == CheckStatus::not_applicable) {
    ++rep.not_applicable;
    return;
  }
  ++rep.applicable;
  if (r.rhs > 0) rep.max_ratio = std::max(rep.max_ratio, r.lhs / r.rhs);
  if (r.passed()) {
    ++rep.passed;
  } else {
    ++rep.failed;
    if (rep.failures.size() < keep) rep.failures.push_back(r);
  }
}

inline SuiteReport run_random_suite(std::string_view name, const SuiteOptions& opt, const SuiteInstance& instance) {
  if (opt.trials < 0) throw std::invalid_argument("suite trials must be nonnegative");
  if (opt.attempt_factor < 1) throw std::invalid_argument("suite attempt factor must be positive");
  SuiteReport rep;
  rep.name = std::string(name);
  rep.seed = opt.seed;
  rep.requested = opt.trials;
  const std::int64_t cap = static_cast<std::int64_t>(opt.trials) * opt.attempt_factor;
  for (std::int64_t i = 0; rep.applicable < opt.trials && i < cap; ++i) {
    ++rep.attempts;
    Rng rng(derive_seed(opt.seed, static_cast<std::uint64_t>(i)));
    std::optional<CheckResult> r;
    try {
      r = instance(rng, i);
    } catch (const PreconditionFailed&) {
      r.reset();
    }
    if (!r) {
      ++rep.not_applicable;
      continue;
    }
    record(rep, *r, opt.keep_failures);
  }
  return rep;
}

inline int uniform_int(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1))); }

inline double uniform_real(Rng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

// Classes U_0..U_{s-1} from a random assignment into s + spare buckets;
// vertices in the spare buckets belong to no class.
inline std::vector<VertexSet> random_classes(int n, int s, int spare, Rng& rng) {
  std::vector<VertexSet> out(static_cast<std::size_t>(s), VertexSet(n));
  for (Vertex v = 0; v < n; ++v) {
    const int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(s + spare)));
    if (c < s) out[static_cast<std::size_t>(c)].set(v);
  }
  return out;
}

// A blow-up of C_m whose big classes are pairwise non-adjacent, with the
// classes in cycle order. Used to put tight instances in the mix.
inline BlowUp sparse_cycle_blowup(int m, int max_size, Rng& rng) {
  std::vector<int> sizes(static_cast<std::size_t>(m), 1);
  for (int i = 0; i + 1 < m; i += 2) sizes[static_cast<std::size_t>(i)] = uniform_int(rng, 1, max_size);
  // Rotate so the position of the singleton pair varies.
  std::rotate(sizes.begin(), sizes.begin() + static_cast<long>(rng.below(static_cast<std::uint64_t>(m))), sizes.end());
  return blow_up(cycle_graph(m), sizes);
}

// -- individual suites ------------------------------------------------------

inline SuiteReport partition_identity_exhaustive(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.name = "partition-identity";
  rep.seed = opt.seed;
  rep.exhaustive = true;
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Graph g(n);
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1U) g.add_edge(pairs[i].first, pairs[i].second);
      for (int k : {3, 4}) {
        ++rep.attempts;
        record(rep, check_random_partition_identity(g, k), opt.keep_failures);
      }
    }
  }
  return rep;
}

inline SuiteReport partition_identity_random(const SuiteOptions& opt) {
  return run_random_suite("partition-identity", opt, [](Rng& rng, std::int64_t) -> std::optional<CheckResult> {
    const int k = uniform_int(rng, 3, 5);
    const int n = uniform_int(rng, 3, k == 3 ? 7 : (k == 4 ? 6 : 5));
    const Graph g = random_graph(n, uniform_real(rng, 0.2, 0.9), rng);
    return check_random_partition_identity(g, k);
  });
}

inline SuiteReport consecutive_odd(const SuiteOptions& opt) {
  return run_random_suite("consecutive-odd", opt, [](Rng& rng, std::int64_t i) -> std::optional<CheckResult> {
    const int k = 2 + static_cast<int>(i % 2);
    const int m = 2 * k + 1;
    if (rng.below(3) == 0) {
      const BlowUp b = sparse_cycle_blowup(m, 3, rng);
      if (b.graph.size() > 12) return std::nullopt;
      return check_cycle_partition_inequality(b.graph, b.partition, k);
    }
    const int n = uniform_int(rng, m, 10);
    const int forbidden[] = {m + 2};
    const Graph g = random_free_graph(n, forbidden, uniform_real(rng, 0.3, 1.0), rng);
    return check_cycle_partition_inequality(g, random_partition(n, m, rng), k);
  });
}

inline SuiteReport lambda_path(const SuiteOptions& opt) {
  return run_random_suite("lambda-path", opt, [](Rng& rng, std::int64_t) -> std::optional<CheckResult> {
    static constexpr double lambdas[] = {1.0, 1.5, 2.0, 3.0};
    const int n = uniform_int(rng, 6, 14);
    const Graph g = random_graph(n, uniform_real(rng, 0.05, 0.4), rng);
    const int s = uniform_int(rng, 2, 5);
    const auto classes = random_classes(n, s, 1, rng);
    return check_lambda_path_bound(g, classes, lambdas[rng.below(4)]);
  });
}

inline SuiteReport forbidden_cycles(const SuiteOptions& opt) {
  return run_random_suite("forbidden-cycles", opt, [](Rng& rng, std::int64_t i) -> std::optional<CheckResult> {
    const int k = rng.below(4) == 0 ? 3 : 2;
    const bool even = i % 2 == 0;
    const int l = even ? uniform_int(rng, 2, 4) : uniform_int(rng, k + 1, k + 2);
    const int forbidden[] = {even ? 2 * l : 2 * l + 1};
    const int n = uniform_int(rng, 2 * k + 1, 12);
    const Graph g = random_free_graph(n, forbidden, uniform_real(rng, 0.3, 1.0), rng);
    const auto classes = random_classes(n, 2 * k + 1, 0, rng);
    return check_forbidden_cycles_main(g, classes, k, l, even ? CycleFreeMode::even_free : CycleFreeMode::odd_free);
  });
}

inline SuiteReport p2_or_triangle(const SuiteOptions& opt, bool triangle) {
  return run_random_suite(triangle ? "triangle" : "p2", opt, [triangle](Rng& rng, std::int64_t) -> std::optional<CheckResult> {
    const int l = uniform_int(rng, 2, 4);
    const int n = uniform_int(rng, 3, 16);
    const int forbidden[] = {2 * l};
    const Graph g = random_free_graph(n, forbidden, uniform_real(rng, 0.3, 1.0), rng);
    return triangle ? check_triangle_bound(g, l) : check_p2_bound(g, l);
  });
}

inline SuiteReport erdos_gallai(const SuiteOptions& opt) {
  return run_random_suite("erdos-gallai", opt, [](Rng& rng, std::int64_t) -> std::optional<CheckResult> {
    const int t = uniform_int(rng, 3, 5);
    const int n = uniform_int(rng, 3, 12);
    const Graph g = random_graph(n, uniform_real(rng, 0.1, 0.7), rng);
    // Only instances above the edge threshold say anything.
    if (2 * g.edge_count() <= static_cast<std::int64_t>(t - 1) * n) return std::nullopt;
    return check_erdos_gallai(g, t);
  });
}

inline SuiteReport zarankiewicz(const SuiteOptions& opt) {
  return run_random_suite("zarankiewicz", opt, [](Rng& rng, std::int64_t) -> std::optional<CheckResult> {
    const int l = uniform_int(rng, 2, 4);
    const int a = uniform_int(rng, 1, 12);
    const int b = uniform_int(rng, 1, 12);
    const int forbidden[] = {2 * l};
    return check_zarankiewicz(random_free_bipartite(a, b, forbidden, uniform_real(rng, 0.5, 1.0), rng), l);
  });
}

inline SuiteReport trimming(const SuiteOptions& opt) {
  const double slack = opt.trimming_slack;
  return run_random_suite("trimming", opt, [slack](Rng& rng, std::int64_t) -> std::optional<CheckResult> {
    const int l = uniform_int(rng, 3, 5);
    std::vector<int> sizes(4);
    for (auto& s : sizes) s = uniform_int(rng, 1, 40);
    int n = 0;
    std::vector<int> offset;
    for (int s : sizes) {
      offset.push_back(n);
      n += s;
    }
    const auto forbidden = even_lengths_up_to(2 * l);
    Graph g(n);
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
      const BipartiteGraph layer = random_free_bipartite(sizes[i], sizes[i + 1], forbidden, uniform_real(rng, 0.3, 1.0), rng);
      for (int x = 0; x < sizes[i]; ++x)
        layer.row(x).for_each([&](Vertex y) { g.add_edge(offset[i] + x, offset[i + 1] + y); });
    }
    std::vector<VertexSet> layers(4, VertexSet(n));
    for (std::size_t i = 0; i < 4; ++i)
      for (int v = 0; v < sizes[i]; ++v) layers[i].set(offset[i] + v);
    return find_trimming_sets(g, layers[0], layers[1], layers[2], layers[3], l, slack).check;
  });
}

inline SuiteReport komlos(const SuiteOptions& opt) {
  TesterConfig config;
  config.komlos_c = opt.komlos_c;
  return run_random_suite("komlos", opt, [config](Rng& rng, std::int64_t i) -> std::optional<CheckResult> {
    if (i % 2 == 0) {
      // Odd-cycle blow-up with random class sizes.
      const int m = 2 * uniform_int(rng, 1, 6) + 1;
      std::vector<int> sizes(static_cast<std::size_t>(m));
      for (auto& s : sizes) s = uniform_int(rng, 1, 6);
      return komlos_check(blow_up(cycle_graph(m), sizes).graph, config);
    }
    // Random bipartite graph with a few edges inside the sides.
    const int n = uniform_int(rng, 3, 16);
    const int left = uniform_int(rng, 1, n - 1);
    Graph g(n);
    const double p = uniform_real(rng, 0.2, 0.9);
    for (Vertex u = 0; u < left; ++u)
      for (Vertex v = left; v < n; ++v)
        if (rng.bernoulli(p)) g.add_edge(u, v);
    const int extra = uniform_int(rng, 1, 3);
    for (int e = 0; e < extra; ++e) {
      const auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      if (u != v) g.add_edge(u, v);
    }
    return komlos_check(g, config);
  });
}

}  // namespace detail

/// Runs a suite by name. Throws std::invalid_argument for unknown names.
inline SuiteReport run_suite(std::string_view name, const SuiteOptions& opt) {
  if (opt.exhaustive && name != "partition-identity")
    throw std::invalid_argument("exhaustive mode is only defined for partition-identity");
  if (name == "partition-identity")
    return opt.exhaustive ? detail::partition_identity_exhaustive(opt) : detail::partition_identity_random(opt);
  if (name == "consecutive-odd") return detail::consecutive_odd(opt);
  if (name == "lambda-path") return detail::lambda_path(opt);
  if (name == "forbidden-cycles") return detail::forbidden_cycles(opt);
  if (name == "p2") return detail::p2_or_triangle(opt, false);
  if (name == "triangle") return detail::p2_or_triangle(opt, true);
  if (name == "erdos-gallai") return detail::erdos_gallai(opt);
  if (name == "zarankiewicz") return detail::zarankiewicz(opt);
  if (name == "trimming") return detail::trimming(opt);
  if (name == "komlos") return detail::komlos(opt);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Polarity graph report.

struct PolarityReport {
  int p = 0;
  int n = 0;
  std::int64_t edges = 0;
  std::uint64_t c4_copies = 0;
  int min_degree = 0;
  int max_degree = 0;
  int loops = 0;
  std::int64_t pairs_without_common_neighbour = 0;
  std::vector<std::uint64_t> path_counts;     // index k-1: #P_k, k = 1..4
  std::vector<long double> path_lower_bounds; // n (p-1)...(p-k) / 2

  bool c4_free() const { return c4_copies == 0; }
  bool degrees_ok() const { return min_degree >= p - 1 && max_degree <= p; }
  bool loops_ok() const { return loops <= 2 * p; }
  bool pairs_ok() const { return pairs_without_common_neighbour <= 3LL * n * p; }
  bool paths_ok() const {
    for (std::size_t i = 0; i < path_counts.size(); ++i)
      if (static_cast<long double>(path_counts[i]) < path_lower_bounds[i]) return false;
    return true;
  }
  bool ok() const { return c4_free() && degrees_ok() && loops_ok() && pairs_ok() && paths_ok(); }
};

inline PolarityReport polarity_report(int p, int max_path = 4) {
  const PolarityGraph pg = build_polarity_graph(p);
  const Graph& g = pg.graph;
  PolarityReport r;
  r.p = p;
  r.n = g.size();
  r.edges = g.edge_count();
  r.c4_copies = count_cycle_copies(g, 4);
  r.loops = pg.loops;
  r.min_degree = r.n ? g.degree(0) : 0;
  r.max_degree = r.min_degree;
  for (Vertex v = 0; v < r.n; ++v) {
    r.min_degree = std::min(r.min_degree, g.degree(v));
    r.max_degree = std::max(r.max_degree, g.degree(v));
  }
  for (Vertex u = 0; u < r.n; ++u)
    for (Vertex v = u + 1; v < r.n; ++v)
      if ((g.row(u) & g.row(v)).none()) ++r.pairs_without_common_neighbour;
  for (int k = 1; k <= max_path; ++k) {
    r.path_counts.push_back(count_path_copies(g, k));
    long double bound = r.n / 2.0L;
    for (int i = 1; i <= k; ++i) bound *= p - i;
    r.path_lower_bounds.push_back(bound);
  }
  return r;
}

}  // namespace turan

#endif  // TURAN_VERIFICATION_HPP
