#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "turan/serialization.hpp"
#include "turan/turan.hpp"

namespace fs = std::filesystem;
using turan::json;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailed = 1;  // verification found violations
constexpr int kError = 2;   // bad input or I/O problem

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("TURAN_SEED");
  if (!env || !*env) return 1;
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0') throw CliError("TURAN_SEED must be a nonnegative integer");
  return v;
}

void write_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw CliError("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// Output locations derive from a stem; a replay may move them to another directory.
fs::path with_suffix(const std::string& stem, const std::string& suffix) { return fs::path(stem + suffix); }

void write_manifest(const std::string& subcommand, const json& params, std::uint64_t seed, const std::string& stem,
                    std::vector<std::string> outputs) {
  turan::RunManifest m;
  m.subcommand = subcommand;
  m.parameters = params;
  m.seed = seed;
  m.stem = stem;
  m.outputs = std::move(outputs);
  write_atomic(with_suffix(stem, ".manifest.json"), dump(turan::to_json(m)));
}

// ---------------------------------------------------------------------------
// construct

struct ConstructOptions {
  turan::ConstructionSpec spec;
  std::string out;
};

json to_json(const ConstructOptions& o) { return json{{"spec", turan::to_json(o.spec)}}; }

ConstructOptions construct_options_from_json(const json& j, const std::string& out) {
  return {turan::construction_spec_from_json(j.at("spec")), out};
}

int run_construct(const ConstructOptions& o) {
  const turan::Graph g = turan::build(o.spec);
  const auto g6_path = with_suffix(o.out, ".g6");
  const auto side_path = with_suffix(o.out, ".json");
  json sidecar{{"version", turan::kVersion},
               {"spec", turan::to_json(o.spec)},
               {"graph6", g6_path.filename().string()},
               {"properties", turan::construction_properties(g, o.spec)}};
  if (o.spec.family == turan::ConstructionFamily::polarity)
    sidecar["discarded_loops"] = turan::build_polarity_graph(o.spec.p).loops;
  write_atomic(g6_path, turan::graph6_encode(g) + "\n");
  write_atomic(side_path, dump(sidecar));
  write_manifest("construct", to_json(o), o.spec.seed, o.out, {g6_path.string(), side_path.string()});
  std::cout << g6_path.string() << ": n=" << g.size() << " e=" << g.edge_count() << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// ex-search

struct ExSearchOptions {
  std::string target = "C3";
  std::vector<int> forbidden;
  int n_from = 1;
  int n_to = 0;
  bool exact = true;
  int limit = turan::kBruteForceDefaultLimit;
  int steps = 20000;
  int restarts = 4;
  double downhill = 0.01;
  std::uint64_t seed = 1;
  std::string out;
};

json to_json(const ExSearchOptions& o) {
  return json{{"target", o.target}, {"forbidden", o.forbidden}, {"n_from", o.n_from}, {"n_to", o.n_to},
              {"mode", o.exact ? "exact" : "hill"}, {"limit", o.limit},     {"steps", o.steps},   {"restarts", o.restarts},
              {"downhill", o.downhill},             {"seed", o.seed}};
}

ExSearchOptions ex_search_options_from_json(const json& j, const std::string& out) {
  ExSearchOptions o;
  o.out = out;
  o.target = j.at("target").get<std::string>();
  o.forbidden = j.at("forbidden").get<std::vector<int>>();
  o.n_from = j.at("n_from").get<int>();
  o.n_to = j.at("n_to").get<int>();
  o.exact = j.at("mode").get<std::string>() == "exact";
  o.limit = j.at("limit").get<int>();
  o.steps = j.at("steps").get<int>();
  o.restarts = j.at("restarts").get<int>();
  o.downhill = j.at("downhill").get<double>();
  o.seed = j.at("seed").get<std::uint64_t>();
  return o;
}

// value / (l^ceil(k/2) n^floor(k/2)) for cycle targets, l the largest forbidden length.
std::string trend(const turan::ExtremalRecord& r) {
  if (r.target.kind != turan::Pattern::Kind::cycle || r.forbidden.empty() || r.n == 0) return "";
  const int k = r.target.length;
  const double l = r.forbidden.back();
  const double denom = std::pow(l, (k + 1) / 2) * std::pow(static_cast<double>(r.n), k / 2);
  return format_double(static_cast<double>(r.value) / denom);
}

std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw CliError("bad range '" + text + "' (expected N or A..B)");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

int run_ex_search(const ExSearchOptions& o) {
  const turan::Pattern target = turan::Pattern::parse(o.target);
  if (o.forbidden.empty()) throw CliError("ex-search needs at least one --forbid length");
  if (o.n_from < 1 && o.n_from <= o.n_to) throw CliError("ex-search: n must be positive");
  std::ostringstream csv;
  csv << "n,target,k,forbidden,l,value,exact,method,nodes,trend,witness\n";
  std::vector<turan::Graph> witnesses;
  json records = json::array();
  for (int n = o.n_from; n <= o.n_to; ++n) {
    turan::ExtremalRecord r;
    if (o.exact) {
      r = turan::brute_force_ex(n, target, o.forbidden, o.limit);
    } else {
      turan::Rng rng(turan::derive_seed(o.seed, static_cast<std::uint64_t>(n)));
      r = turan::hill_climb_ex(n, target, o.forbidden, {o.steps, o.restarts, o.downhill}, rng);
    }
    if (!turan::verify_record(r)) throw std::logic_error("witness failed re-verification at n=" + std::to_string(n));
    std::string forb;
    for (std::size_t i = 0; i < r.forbidden.size(); ++i) forb += (i ? ";" : "") + std::to_string(r.forbidden[i]);
    csv << r.n << "," << r.target.name() << "," << r.target.length << "," << forb << "," << r.forbidden.back() << ","
        << r.value << "," << (r.exact ? "exact" : "lower-bound") << "," << r.method << "," << r.nodes << "," << trend(r)
        << "," << witnesses.size() << "\n";
    witnesses.push_back(r.witness);
    records.push_back(turan::to_json(r));
    std::cerr << "n=" << n << " value=" << r.value << " (" << format_double(r.seconds) << " s)\n";
  }
  std::ostringstream g6;
  turan::write_graph6_lines(g6, witnesses);
  const auto csv_path = with_suffix(o.out, ".csv");
  const auto g6_path = with_suffix(o.out, "_witnesses.g6");
  const auto json_path = with_suffix(o.out, ".json");
  write_atomic(csv_path, csv.str());
  write_atomic(g6_path, g6.str());
  write_atomic(json_path, dump(json{{"version", turan::kVersion}, {"parameters", to_json(o)}, {"records", records}}));
  write_manifest("ex-search", to_json(o), o.seed, o.out, {csv_path.string(), g6_path.string(), json_path.string()});
  std::cout << csv.str();
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string suite;
  std::string trials = "10000";
  std::uint64_t seed = 1;
  double slack = turan::kTrimmingDefaultSlack;
  double komlos_c = 2.0;
  std::string out;
};

json to_json(const VerifyOptions& o) {
  return json{{"suite", o.suite}, {"trials", o.trials}, {"seed", o.seed}, {"slack", o.slack}, {"komlos_c", o.komlos_c}};
}

VerifyOptions verify_options_from_json(const json& j, const std::string& out) {
  VerifyOptions o;
  o.out = out;
  o.suite = j.at("suite").get<std::string>();
  o.trials = j.at("trials").get<std::string>();
  o.seed = j.at("seed").get<std::uint64_t>();
  o.slack = j.at("slack").get<double>();
  o.komlos_c = j.at("komlos_c").get<double>();
  return o;
}

int run_verify(const VerifyOptions& o) {
  if (!turan::is_suite_name(o.suite)) throw CliError("unknown suite '" + o.suite + "'");
  turan::SuiteOptions so;
  so.seed = o.seed;
  so.trimming_slack = o.slack;
  so.komlos_c = o.komlos_c;
  if (o.trials == "all") {
    if (o.suite != "partition-identity") throw CliError("--trials all is only defined for partition-identity");
    so.exhaustive = true;
  } else {
    std::size_t used = 0;
    try {
      so.trials = std::stoi(o.trials, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != o.trials.size() || so.trials < 0) throw CliError("--trials must be a nonnegative integer or 'all'");
  }
  const turan::SuiteReport rep = turan::run_suite(o.suite, so);
  for (const auto& f : rep.failures) std::cout << turan::to_json(f).dump() << "\n";
  const json summary = turan::to_json(rep);
  json brief = summary;
  brief.erase("failures");
  std::cout << brief.dump() << "\n";

  std::vector<std::string> outputs;
  const auto json_path = with_suffix(o.out, ".json");
  write_atomic(json_path, dump(json{{"version", turan::kVersion}, {"parameters", to_json(o)}, {"report", summary}}));
  outputs.push_back(json_path.string());
  if (!rep.failures.empty()) {
    std::vector<turan::Graph> graphs;
    for (const auto& f : rep.failures)
      if (f.counterexample) graphs.push_back(*f.counterexample);
    std::ostringstream g6;
    turan::write_graph6_lines(g6, graphs);
    const auto g6_path = with_suffix(o.out, "_counterexamples.g6");
    write_atomic(g6_path, g6.str());
    outputs.push_back(g6_path.string());
  }
  write_manifest("verify", to_json(o), o.seed, o.out, outputs);
  if (!so.exhaustive && rep.applicable < so.trials)
    std::cerr << "warning: only " << rep.applicable << " applicable instances in " << rep.attempts << " attempts\n";
  return rep.failed == 0 ? kOk : kFailed;
}

// ---------------------------------------------------------------------------
// experiment separation

struct SeparationOptions {
  std::vector<int> l2{101};
  std::optional<int> n;
  int grid = 50;
  turan::TesterConfig config;
  std::string out;
};

json to_json(const SeparationOptions& o) {
  return json{{"l2", o.l2},
              {"n", o.n ? json(*o.n) : json(nullptr)},
              {"grid", o.grid},
              {"config", turan::to_json(o.config)}};
}

SeparationOptions separation_options_from_json(const json& j, const std::string& out) {
  SeparationOptions o;
  o.out = out;
  o.l2 = j.at("l2").get<std::vector<int>>();
  if (!j.at("n").is_null()) o.n = j.at("n").get<int>();
  o.grid = j.at("grid").get<int>();
  o.config = turan::tester_config_from_json(j.at("config"));
  return o;
}

void rate_rows(std::ostringstream& csv, int l2, const std::vector<turan::RateEstimate>& rates) {
  for (const auto& r : rates)
    csv << l2 << "," << r.q << "," << r.trials << "," << r.rejections << "," << format_double(r.rate) << ","
        << format_double(r.interval.lower) << "," << format_double(r.interval.upper) << "\n";
}

int run_separation(const SeparationOptions& o) {
  for (int l2 : o.l2)
    if (l2 % 2 == 0 || l2 < 5) throw CliError("L must be odd integers: l2 = " + std::to_string(l2) + " (need odd l2 >= 5)");
  const auto rep = turan::separation_experiment(o.l2, o.config, o.grid, o.n);
  std::ostringstream one;
  std::ostringstream two;
  one << "l2,q,trials,rejections,rate,lower,upper\n";
  two << "l2,q,trials,rejections,rate,lower,upper\n";
  for (const auto& row : rep.rows) {
    rate_rows(one, row.l2, row.one_sided_grid);
    rate_rows(two, row.l2, row.two_sided.evaluated);
  }
  const auto json_path = with_suffix(o.out, ".json");
  const auto one_path = with_suffix(o.out, "_one_sided.csv");
  const auto two_path = with_suffix(o.out, "_two_sided.csv");
  json report = turan::to_json(rep);
  report["parameters"] = to_json(o);
  write_atomic(json_path, dump(report));
  write_atomic(one_path, one.str());
  write_atomic(two_path, two.str());
  write_manifest("experiment-separation", to_json(o), o.config.seed, o.out,
                 {json_path.string(), one_path.string(), two_path.string()});
  for (const auto& row : rep.rows) {
    std::cout << "l2=" << row.l2 << " n=" << row.n << " one-sided floor=" << row.one_sided_floor
              << " grid all zero=" << (row.one_sided_grid_all_zero ? "yes" : "no") << " two-sided q=";
    if (row.two_sided.q)
      std::cout << *row.two_sided.q << " [" << *row.two_sided.q_low << ", " << *row.two_sided.q << "]";
    else
      std::cout << "none";
    std::cout << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// run-manifest

std::string relocate(const std::string& stem, const std::optional<std::string>& dir) {
  if (!dir) return stem;
  return (fs::path(*dir) / fs::path(stem).filename()).string();
}

int run_manifest(const std::string& path, const std::optional<std::string>& out_dir) {
  std::ifstream in(path);
  if (!in) throw CliError("cannot read manifest " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw CliError("manifest " + path + " is not valid JSON: " + e.what());
  }
  const turan::RunManifest m = turan::run_manifest_from_json(j);
  if (m.version != turan::kVersion)
    std::cerr << "warning: manifest written by version " << m.version << ", running " << turan::kVersion << "\n";
  if (m.stem.empty()) throw CliError("manifest has no output stem");
  const std::string stem = relocate(m.stem, out_dir);
  if (m.subcommand == "construct") return run_construct(construct_options_from_json(m.parameters, stem));
  if (m.subcommand == "ex-search") return run_ex_search(ex_search_options_from_json(m.parameters, stem));
  if (m.subcommand == "verify") return run_verify(verify_options_from_json(m.parameters, stem));
  if (m.subcommand == "experiment-separation") return run_separation(separation_options_from_json(m.parameters, stem));
  throw CliError("manifest has unknown subcommand '" + m.subcommand + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Turan numbers, cycle counting and L-freeness testing"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(turan::kVersion));

  std::uint64_t env_seed = 1;
  try {
    env_seed = default_seed();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }

  // construct
  ConstructOptions construct;
  std::string family;
  std::string target = "C5";
  construct.spec.seed = env_seed;
  auto* c = app.add_subcommand("construct", "Build a named construction; writes <out>.g6 and <out>.json");
  c->add_option("family", family, "polarity | cycle-blowup | path-blowup | general-blowup | triangle-booster | hard-L-free")
      ->required();
  c->add_option("--p", construct.spec.p, "prime (polarity)");
  c->add_option("--k", construct.spec.k, "pattern length (cycle/path blow-ups)");
  c->add_option("--l", construct.spec.l, "forbidden / hard-instance cycle length");
  c->add_option("--m", construct.spec.m, "blow-up class size");
  c->add_option("--n", construct.spec.n, "vertex count (general-blowup, hard-L-free)");
  c->add_option("--a", construct.spec.a, "side A of the booster input");
  c->add_option("--b", construct.spec.b, "side B of the booster input");
  c->add_option("--target", target, "target pattern for general-blowup, e.g. C5 or P3");
  c->add_flag("--with-isolated", construct.spec.with_isolated, "hard-L-free: add an isolated vertex");
  c->add_option("--seed", construct.spec.seed, "seed for the booster input (default TURAN_SEED or 1)");
  c->add_option("--out", construct.out, "output stem (default: the family name)");

  // ex-search
  ExSearchOptions ex;
  ex.seed = env_seed;
  std::string range;
  bool hill = false;
  bool exact_flag = false;
  auto* e = app.add_subcommand("ex-search", "Exact or stochastic ex(n, T, {C_l}) over a range of n");
  e->add_option("--target", ex.target, "target pattern, e.g. C5 or P3")->required();
  e->add_option("--forbid", ex.forbidden, "forbidden cycle length (repeatable)")->required();
  e->add_option("--n", range, "N or A..B")->required();
  auto* ex_exact = e->add_flag("--exact", exact_flag, "brute force (default)");
  e->add_flag("--hill", hill, "hill climbing lower bound")->excludes(ex_exact);
  e->add_option("--limit", ex.limit, "largest n allowed in exact mode");
  e->add_option("--steps", ex.steps, "hill-climb steps per restart");
  e->add_option("--restarts", ex.restarts, "hill-climb restarts");
  e->add_option("--downhill", ex.downhill, "hill-climb probability of a worsening move");
  e->add_option("--seed", ex.seed, "master seed (default TURAN_SEED or 1)");
  e->add_option("--out", ex.out, "output stem (default ex_search)");

  // verify
  VerifyOptions ver;
  ver.seed = env_seed;
  auto* v = app.add_subcommand("verify", "Run an inequality suite; exit 0 iff no violations");
  v->add_option("suite", ver.suite, "suite name")->required();
  v->add_option("--trials", ver.trials, "applicable instances wanted, or 'all' (partition-identity)");
  v->add_option("--seed", ver.seed, "master seed (default TURAN_SEED or 1)");
  v->add_option("--slack", ver.slack, "trimming slack multiplier");
  v->add_option("--komlos-c", ver.komlos_c, "odd-girth constant for the komlos suite");
  v->add_option("--out", ver.out, "output stem (default: the suite name)");

  // experiment separation
  SeparationOptions sep;
  sep.config.seed = env_seed;
  sep.config.epsilon = 1.0 / 50;
  int sep_n = 0;
  auto* x = app.add_subcommand("experiment", "Property-testing experiments");
  x->require_subcommand(1);
  auto* xs = x->add_subcommand("separation", "One-sided vs two-sided sample sizes on C5 blow-ups");
  std::vector<int> l2_values;
  xs->add_option("--l2", l2_values, "second forbidden length (odd, repeatable; default 101)");
  xs->add_option("--n", sep_n, "vertex count (default 5(l2 - 1))");
  xs->add_option("--grid", sep.grid, "one-sided grid points below l2");
  xs->add_option("--epsilon", sep.config.epsilon, "proximity parameter");
  xs->add_option("--trials", sep.config.trials, "trials per sample size");
  xs->add_option("--confidence", sep.config.confidence, "interval confidence");
  xs->add_option("--tolerance", sep.config.tolerance, "slack on the 2/3 lower-bound test");
  xs->add_option("--restarts", sep.config.restarts, "max-cut heuristic restarts");
  xs->add_option("--exact-limit", sep.config.exact_cut_limit, "exact max-cut limit (twin classes)");
  xs->add_option("--seed", sep.config.seed, "master seed (default TURAN_SEED or 1)");
  xs->add_option("--out", sep.out, "output stem (default separation)");

  // run-manifest
  std::string manifest_path;
  std::string out_dir;
  auto* r = app.add_subcommand("run-manifest", "Repeat a run from its manifest");
  r->add_option("manifest", manifest_path, "path to <out>.manifest.json")->required()->check(CLI::ExistingFile);
  r->add_option("--out-dir", out_dir, "write outputs into this directory instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? kOk : kError;
  }

  try {
    if (c->parsed()) {
      construct.spec.family = turan::parse_family(family);
      construct.spec.target = turan::Pattern::parse(target);
      if (construct.out.empty()) construct.out = family;
      return run_construct(construct);
    }
    if (e->parsed()) {
      std::tie(ex.n_from, ex.n_to) = parse_range(range);
      ex.exact = !hill;
      if (ex.out.empty()) ex.out = "ex_search";
      return run_ex_search(ex);
    }
    if (v->parsed()) {
      if (ver.out.empty()) ver.out = ver.suite;
      return run_verify(ver);
    }
    if (xs->parsed()) {
      if (!l2_values.empty()) sep.l2 = l2_values;
      if (sep_n > 0) sep.n = sep_n;
      if (sep.out.empty()) sep.out = "separation";
      return run_separation(sep);
    }
    if (r->parsed()) return run_manifest(manifest_path, out_dir.empty() ? std::nullopt : std::optional<std::string>(out_dir));
  } catch (const turan::LimitExceeded& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kError;
  }
  return kError;
}
