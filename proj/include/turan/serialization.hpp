#ifndef TURAN_SERIALIZATION_HPP
#define TURAN_SERIALIZATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "turan/checks.hpp"
#include "turan/constructions.hpp"
#include "turan/extremal.hpp"
#include "turan/graph.hpp"
#include "turan/graph6.hpp"
#include "turan/pattern.hpp"
#include "turan/property_testing.hpp"
#include "turan/verification.hpp"
#include "turan/version.hpp"

// JSON forms of the result types. Graphs are stored as graph6 strings.
// Wall-clock times are never written, so equal inputs give equal bytes.

namespace turan {

using json = nlohmann::ordered_json;

inline json graph_to_json(const Graph& g) { return graph6_encode(g); }

inline Graph graph_from_json(const json& j) { return graph6_decode(j.get<std::string>()); }

inline json to_json(const ExtremalRecord& r) {
  return json{{"n", r.n},
              {"target", r.target.name()},
              {"forbidden", r.forbidden},
              {"value", r.value},
              {"exact", r.exact},
              {"method", r.method},
              {"nodes", r.nodes},
              {"witness", graph_to_json(r.witness)}};
}

inline ExtremalRecord extremal_record_from_json(const json& j) {
  ExtremalRecord r;
  r.n = j.at("n").get<int>();
  r.target = Pattern::parse(j.at("target").get<std::string>());
  r.forbidden = j.at("forbidden").get<std::vector<int>>();
  r.value = j.at("value").get<std::uint64_t>();
  r.exact = j.at("exact").get<bool>();
  r.method = j.at("method").get<std::string>();
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.witness = graph_from_json(j.at("witness"));
  return r;
}

inline json to_json(const CheckResult& r) {
  json j{{"name", r.name},     {"instance", r.instance}, {"relation", r.relation}, {"lhs", r.lhs},
         {"rhs", r.rhs},       {"status", status_name(r.status)}, {"detail", r.detail}};
  if (r.counterexample) j["counterexample"] = graph_to_json(*r.counterexample);
  return j;
}

inline json to_json(const ConstructionSpec& s) {
  json j{{"family", std::string(family_name(s.family))}};
  switch (s.family) {
    case ConstructionFamily::polarity:
      j["p"] = s.p;
      break;
    case ConstructionFamily::cycle_blowup:
    case ConstructionFamily::path_blowup:
      j["k"] = s.k;
      j["l"] = s.l;
      j["m"] = s.m;
      break;
    case ConstructionFamily::general_blowup:
      j["target"] = s.target.name();
      j["l"] = s.l;
      j["n"] = s.n;
      break;
    case ConstructionFamily::triangle_booster:
      j["l"] = s.l;
      j["a"] = s.a;
      j["b"] = s.b;
      j["seed"] = s.seed;
      break;
    case ConstructionFamily::hard_L_free:
      j["l"] = s.l;
      j["n"] = s.n;
      j["with_isolated"] = s.with_isolated;
      break;
  }
  return j;
}

inline ConstructionSpec construction_spec_from_json(const json& j) {
  ConstructionSpec s;
  s.family = parse_family(j.at("family").get<std::string>());
  s.p = j.value("p", 0);
  s.k = j.value("k", 0);
  s.l = j.value("l", 0);
  s.m = j.value("m", 0);
  s.n = j.value("n", 0);
  s.a = j.value("a", 0);
  s.b = j.value("b", 0);
  s.seed = j.value("seed", std::uint64_t{0});
  s.with_isolated = j.value("with_isolated", false);
  if (j.contains("target")) s.target = Pattern::parse(j.at("target").get<std::string>());
  return s;
}

inline json to_json(const TesterConfig& c) {
  return json{{"epsilon", c.epsilon},       {"trials", c.trials},         {"seed", c.seed},
              {"exact_cut_limit", c.exact_cut_limit}, {"restarts", c.restarts}, {"komlos_c", c.komlos_c},
              {"confidence", c.confidence}, {"tolerance", c.tolerance}};
}

inline TesterConfig tester_config_from_json(const json& j) {
  TesterConfig c;
  c.epsilon = j.value("epsilon", c.epsilon);
  c.trials = j.value("trials", c.trials);
  c.seed = j.value("seed", c.seed);
  c.exact_cut_limit = j.value("exact_cut_limit", c.exact_cut_limit);
  c.restarts = j.value("restarts", c.restarts);
  c.komlos_c = j.value("komlos_c", c.komlos_c);
  c.confidence = j.value("confidence", c.confidence);
  c.tolerance = j.value("tolerance", c.tolerance);
  return c;
}

inline json to_json(const RateEstimate& r) {
  return json{{"q", r.q},
              {"trials", r.trials},
              {"rejections", r.rejections},
              {"rate", r.rate},
              {"lower", r.interval.lower},
              {"upper", r.interval.upper}};
}

inline json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

inline json to_json(const WitnessEstimate& w) {
  json rates = json::array();
  for (const auto& r : w.evaluated) rates.push_back(to_json(r));
  return json{{"q", optional_int(w.q)}, {"q_low", optional_int(w.q_low)}, {"rates", rates}};
}

inline json to_json(const SeparationRow& row) {
  json grid = json::array();
  for (const auto& r : row.one_sided_grid) grid.push_back(to_json(r));
  return json{{"l2", row.l2},
              {"n", row.n},
              {"instance", "balanced blow-up of C5"},
              {"L", row.lengths},
              {"bipartite_distance", row.bipartite_distance},
              {"farness", row.farness},
              {"one_sided_floor", row.one_sided_floor},
              {"one_sided_grid_all_zero", row.one_sided_grid_all_zero},
              {"one_sided", grid},
              {"two_sided", to_json(row.two_sided)}};
}

inline json to_json(const SeparationReport& rep) {
  json rows = json::array();
  for (const auto& row : rep.rows) rows.push_back(to_json(row));
  return json{{"experiment", "separation"},
              {"version", kVersion},
              {"config", to_json(rep.config)},
              {"rows", rows},
              {"floors_match", rep.floors_match},
              {"two_sided_overlap", rep.two_sided_overlap}};
}

inline json to_json(const SuiteReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back(to_json(f));
  return json{{"suite", r.name},
              {"seed", r.seed},
              {"requested", r.exhaustive ? json("all") : json(r.requested)},
              {"attempts", r.attempts},
              {"applicable", r.applicable},
              {"passed", r.passed},
              {"failed", r.failed},
              {"not_applicable", r.not_applicable},
              {"max_ratio", r.max_ratio},
              {"ok", r.ok()},
              {"failures", failures}};
}

inline json to_json(const PolarityReport& r) {
  return json{{"p", r.p},
              {"n", r.n},
              {"edges", r.edges},
              {"c4_copies", r.c4_copies},
              {"min_degree", r.min_degree},
              {"max_degree", r.max_degree},
              {"loops", r.loops},
              {"pairs_without_common_neighbour", r.pairs_without_common_neighbour},
              {"path_counts", r.path_counts},
              {"ok", r.ok()}};
}

// ---------------------------------------------------------------------------
// Construction sidecars.

inline constexpr int kSidecarCountLimit = 200;  // copy counts only up to this many vertices

/// Verified properties of a constructed graph: cycle freeness for lengths
/// 3..8 plus the spec's l, and exact copy counts of C3, C4, C5 and the
/// spec's pattern on graphs with at most kSidecarCountLimit vertices.
inline json construction_properties(const Graph& g, const ConstructionSpec& spec) {
  std::vector<int> lengths{3, 4, 5, 6, 7, 8};
  if (spec.l > 8 && spec.l <= g.size()) lengths.push_back(spec.l);
  std::vector<Pattern> counted{Pattern::cycle(3), Pattern::cycle(4), Pattern::cycle(5)};
  if (spec.family == ConstructionFamily::cycle_blowup && spec.k > 5 && spec.k <= 8) counted.push_back(Pattern::cycle(spec.k));
  if (spec.family == ConstructionFamily::path_blowup && spec.k <= 6) counted.push_back(Pattern::path(spec.k));
  if (spec.family == ConstructionFamily::general_blowup && spec.target.vertex_count() <= 8 &&
      !(spec.target.kind == Pattern::Kind::cycle && spec.target.length <= 5))
    counted.push_back(spec.target);

  CycleOracle oracle(g);
  json free = json::object();
  for (int l : lengths) free["C" + std::to_string(l)] = l > g.size() || !oracle.contains(l);
  json copies = json::object();
  if (g.size() <= kSidecarCountLimit)
    for (const auto& t : counted) copies[t.name()] = t.count_in(g);
  json j{{"n", g.size()}, {"edges", g.edge_count()}, {"free", free}, {"copies", copies}};
  if (oracle.odd_girth() > 0) j["odd_girth"] = oracle.odd_girth();
  return j;
}

// ---------------------------------------------------------------------------
// Run manifests.

struct RunManifest {
  std::string subcommand;
  json parameters = json::object();
  std::uint64_t seed = 0;
  std::string version = kVersion;
  std::string stem;  // output paths are derived from it
  std::vector<std::string> outputs;
};

inline json to_json(const RunManifest& m) {
  return json{{"subcommand", m.subcommand},
              {"parameters", m.parameters},
              {"seed", m.seed},
              {"version", m.version},
              {"stem", m.stem},
              {"outputs", m.outputs}};
}

inline RunManifest run_manifest_from_json(const json& j) {
  RunManifest m;
  m.subcommand = j.at("subcommand").get<std::string>();
  m.parameters = j.at("parameters");
  m.seed = j.value("seed", std::uint64_t{0});
  m.version = j.value("version", std::string(kVersion));
  m.stem = j.value("stem", std::string{});
  m.outputs = j.value("outputs", std::vector<std::string>{});
  return m;
}

}  // namespace turan

#endif  // TURAN_SERIALIZATION_HPP
