#ifndef TURAN_PROPERTY_TESTING_HPP
#define TURAN_PROPERTY_TESTING_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "turan/checks.hpp"
#include "turan/constructions.hpp"
#include "turan/cycles.hpp"
#include "turan/graph.hpp"
#include "turan/maxcut.hpp"
#include "turan/random.hpp"

// Sampling testers for L-freeness and the one-sided / two-sided comparison.

namespace turan {

/// Knobs for the testers. The sample-size constants of the asymptotic
/// analysis have no usable values, so sample sizes are searched empirically
/// and the only constant kept is the odd-girth multiplier `komlos_c`.
struct TesterConfig {
  double epsilon = 0.02;
  int trials = 200;
  std::uint64_t seed = 1;
  int exact_cut_limit = kDefaultExactCutLimit;
  int restarts = 8;
  double komlos_c = 2.0;
  double confidence = 0.95;
  double tolerance = 0.0;  // a q qualifies when the lower bound is >= 2/3 - tolerance

  void validate() const {
    if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0,1)");
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    if (exact_cut_limit < 1 || restarts < 1) throw std::invalid_argument("limits must be positive");
    if (!(confidence > 0 && confidence < 1)) throw std::invalid_argument("confidence must lie in (0,1)");
    if (tolerance < 0 || tolerance >= 2.0 / 3.0) throw std::invalid_argument("tolerance must lie in [0, 2/3)");
  }
};

inline constexpr double kRejectThreshold = 2.0 / 3.0;

struct Interval {
  double lower = 0;
  double upper = 1;
};

/// Wilson score interval for `successes` out of `trials`.
inline Interval wilson_interval(int successes, int trials, double confidence) {
  if (trials <= 0) return {0.0, 1.0};
  const double z = boost::math::quantile(boost::math::normal(), 0.5 + confidence / 2);
  const double nt = trials;
  const double p = successes / nt;
  const double denom = 1 + z * z / nt;
  const double centre = (p + z * z / (2 * nt)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / nt + z * z / (4 * nt * nt)) / denom;
  Interval out{std::max(0.0, centre - half), std::min(1.0, centre + half)};
  // Guard against rounding at the ends.
  out.lower = std::min(out.lower, p);
  out.upper = std::max(out.upper, p);
  return out;
}

struct RateEstimate {
  int q = 0;
  int trials = 0;
  int rejections = 0;
  double rate = 0;
  Interval interval;
};

namespace detail {

template <typename RejectFn>
RateEstimate estimate_rate(const Graph& g, int q, const TesterConfig& config, std::uint64_t stream, RejectFn&& rejects) {
  if (q < 0 || q > g.size()) throw std::invalid_argument("sample size must satisfy 0 <= q <= n");
  RateEstimate r;
  r.q = q;
  r.trials = config.trials;
  for (int t = 0; t < config.trials; ++t) {
    // One generator per (stream, q, trial): independent of evaluation order.
    Rng rng(derive_seed(derive_seed(derive_seed(config.seed, stream), static_cast<std::uint64_t>(q)), static_cast<std::uint64_t>(t)));
    const Graph sample = sample_induced(g, q, rng);
    if (rejects(sample, rng)) ++r.rejections;
  }
  r.rate = static_cast<double>(r.rejections) / r.trials;
  r.interval = wilson_interval(r.rejections, r.trials, config.confidence);
  return r;
}

inline constexpr std::uint64_t kOneSidedStream = 1;
inline constexpr std::uint64_t kTwoSidedStream = 2;

}  // namespace detail

/// Frequency with which a uniform q-sample is not L-free.
inline RateEstimate one_sided_reject_rate(const Graph& g, std::span<const int> lengths, int q, const TesterConfig& config) {
  config.validate();
  return detail::estimate_rate(g, q, config, detail::kOneSidedStream,
                               [&](const Graph& s, Rng&) { return !is_L_free(s, lengths); });
}

/// One run of the two-sided tester on a given sample: reject iff the sample
/// is more than epsilon/2 far from bipartite.
inline bool two_sided_rejects_sample(const Graph& sample, const TesterConfig& config, Rng& rng) {
  if (sample.size() == 0) return false;
  const auto d = bipartite_distance(sample, CutMethod::automatic, rng, config.exact_cut_limit, config.restarts);
  return d.farness > config.epsilon / 2;
}

/// One run of the two-sided tester with sample size q.
inline bool two_sided_tester(const Graph& g, int q, const TesterConfig& config, Rng& rng) {
  config.validate();
  return two_sided_rejects_sample(sample_induced(g, q, rng), config, rng);
}

inline RateEstimate two_sided_reject_rate(const Graph& g, int q, const TesterConfig& config) {
  config.validate();
  return detail::estimate_rate(g, q, config, detail::kTwoSidedStream,
                               [&](const Graph& s, Rng& rng) { return two_sided_rejects_sample(s, config, rng); });
}

/// Minimal sample size for rejection probability >= 2/3.
struct WitnessEstimate {
  std::optional<int> q;       // smallest q whose interval lower bound >= 2/3 - tolerance
  std::optional<int> q_low;   // smallest q whose interval upper bound >= 2/3
  std::vector<RateEstimate> evaluated;  // every q looked at, sorted by q
};

namespace detail {

// Smallest q in [lo, n] satisfying pred, assuming pred is monotone in q:
// doubling from lo, then bisection.
template <typename Pred>
std::optional<int> smallest_q(int lo, int n, Pred&& pred) {
  if (lo > n) return std::nullopt;
  int bad = lo - 1;
  int good = -1;
  for (int q = lo;; q = std::min(n, 2 * q)) {
    if (pred(q)) {
      good = q;
      break;
    }
    bad = q;
    if (q == n) return std::nullopt;
  }
  while (good - bad > 1) {
    const int mid = bad + (good - bad) / 2;
    if (pred(mid))
      good = mid;
    else
      bad = mid;
  }
  return good;
}

template <typename RateFn>
WitnessEstimate search_witness(int n, int start, const TesterConfig& config, RateFn&& rate_at) {
  std::map<int, RateEstimate> cache;
  auto rate = [&](int q) -> const RateEstimate& {
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, rate_at(q)).first;
    return it->second;
  };
  WitnessEstimate out;
  out.q = smallest_q(start, n, [&](int q) { return rate(q).interval.lower >= kRejectThreshold - config.tolerance; });
  out.q_low = smallest_q(start, n, [&](int q) { return rate(q).interval.upper >= kRejectThreshold; });
  for (auto& [q, r] : cache) out.evaluated.push_back(r);
  return out;
}

}  // namespace detail

/// Empirical witness complexity of L-freeness on g.
inline WitnessEstimate witness_complexity_estimate(const Graph& g, std::span<const int> lengths, const TesterConfig& config) {
  config.validate();
  int start = g.size() + 1;
  for (int l : lengths) start = std::min(start, l);
  start = std::max(start, 1);
  return detail::search_witness(g.size(), start, config, [&](int q) { return one_sided_reject_rate(g, lengths, q, config); });
}

/// Empirical minimal q for the two-sided tester.
inline WitnessEstimate two_sided_complexity_estimate(const Graph& g, const TesterConfig& config) {
  config.validate();
  return detail::search_witness(g.size(), 1, config, [&](int q) { return two_sided_reject_rate(g, q, config); });
}

// ---------------------------------------------------------------------------
// Odd girth versus distance to bipartiteness.

/// shortest_odd_cycle(g) <= c * eps^(-1/2), eps the exact bipartite farness.
/// Bipartite inputs are vacuous (not-applicable).
inline CheckResult komlos_check(const Graph& g, const TesterConfig& config) {
  CheckResult r;
  r.name = "komlos";
  r.instance = "n=" + std::to_string(g.size()) + " e=" + std::to_string(g.edge_count());
  const auto girth = shortest_odd_cycle(g);
  if (!girth) {
    r.status = CheckStatus::not_applicable;
    r.detail = "bipartite";
    return r;
  }
  const auto d = bipartite_distance(g, config.exact_cut_limit);
  const double eps = d.farness;
  r.lhs = *girth;
  r.rhs = config.komlos_c / std::sqrt(eps);
  r.detail = "ratio=" + std::to_string(*girth * std::sqrt(eps)) + " farness=" + std::to_string(eps);
  r.status = r.lhs <= r.rhs ? CheckStatus::pass : CheckStatus::fail;
  if (r.failed()) r.counterexample = g;
  return r;
}

// ---------------------------------------------------------------------------
// Separation experiment.

struct SeparationRow {
  int l2 = 0;
  int n = 0;
  std::vector<int> lengths;       // L = {3, l2}
  std::int64_t bipartite_distance = 0;
  double farness = 0;
  int one_sided_floor = 0;        // min l in L with C_l in G: no smaller sample can contain a forbidden cycle
  std::vector<RateEstimate> one_sided_grid;  // q < l2
  bool one_sided_grid_all_zero = true;
  WitnessEstimate two_sided;
};

struct SeparationReport {
  TesterConfig config;
  int blowup_base = 5;
  std::vector<SeparationRow> rows;
  bool floors_match = true;        // every floor equals its l2
  bool two_sided_overlap = true;   // all two-sided q intervals intersect
};

/// Sample sizes below l2 at which the one-sided rate is measured.
inline std::vector<int> one_sided_grid(int l2, int points = 50) {
  std::vector<int> qs;
  for (int i = 1; i <= points; ++i) qs.push_back(std::max(1, static_cast<int>(std::lround(static_cast<double>(l2 - 1) * i / points))));
  qs.push_back(l2 - 1);
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  return qs;
}

/// For each odd l2: G is the balanced blow-up of C_5 with l2 - 1 vertices
/// per class (n = 5(l2 - 1), unless `n` is given) and L = {3, l2}.
inline SeparationReport separation_experiment(std::span<const int> l2_values, const TesterConfig& config, int grid_points = 50,
                                              std::optional<int> n = std::nullopt) {
  config.validate();
  if (grid_points < 1) throw std::invalid_argument("grid needs at least one point");
  if (n && *n < 5) throw std::invalid_argument("separation instance needs n >= 5");
  SeparationReport report;
  report.config = config;
  for (int l2 : l2_values) {
    if (l2 < 5 || l2 % 2 == 0) throw std::invalid_argument("L must be odd integers (l2 >= 5)");
    SeparationRow row;
    row.l2 = l2;
    row.n = n ? *n : 5 * (l2 - 1);
    row.lengths = {3, l2};
    const Graph g = hard_L_free_instance(3, row.n, false);
    const auto d = bipartite_distance(g, config.exact_cut_limit);
    row.bipartite_distance = d.edges_to_remove;
    row.farness = d.farness;
    CycleOracle oracle(g);
    row.one_sided_floor = 0;
    for (int l : row.lengths)
      if (oracle.contains(l)) {
        row.one_sided_floor = l;
        break;
      }
    for (int q : one_sided_grid(l2, grid_points)) {
      if (q > row.n) break;
      auto r = one_sided_reject_rate(g, row.lengths, q, config);
      if (r.rejections != 0) row.one_sided_grid_all_zero = false;
      row.one_sided_grid.push_back(r);
    }
    row.two_sided = two_sided_complexity_estimate(g, config);
    if (row.one_sided_floor != l2) report.floors_match = false;
    report.rows.push_back(std::move(row));
  }
  // Interval [q_low, q] per row; all must share a point.
  int lo = 0;
  int hi = 1 << 30;
  for (const auto& row : report.rows) {
    if (!row.two_sided.q || !row.two_sided.q_low) {
      report.two_sided_overlap = false;
      continue;
    }
    lo = std::max(lo, *row.two_sided.q_low);
    hi = std::min(hi, *row.two_sided.q);
  }
  if (lo > hi) report.two_sided_overlap = false;
  return report;
}

}  // namespace turan

#endif  // TURAN_PROPERTY_TESTING_HPP
