// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "support/oracles.hpp"
#include "turan/constructions.hpp"
#include "turan/extremal.hpp"
#include "turan/maxcut.hpp"
#include "turan/property_testing.hpp"
#include "turan/verification.hpp"

#ifndef TURAN_CLI_PATH
#error "TURAN_CLI_PATH must name the turan executable"
#endif

using namespace turan;
namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

namespace {

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string note;

  void fail(const std::string& why) {
    pass = false;
    if (!note.empty()) note += "; ";
    note += why;
  }
};

// 1. polarity graphs
Outcome polarity() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int p : {3, 5, 7, 11, 13}) {
    const auto r = polarity_report(p);
    if (!r.c4_free()) o.fail("p=" + std::to_string(p) + " has C4");
    if (!r.degrees_ok()) o.fail("p=" + std::to_string(p) + " degree out of range");
    if (!r.loops_ok()) o.fail("p=" + std::to_string(p) + " loops");
    if (!r.pairs_ok()) o.fail("p=" + std::to_string(p) + " pairs without common neighbour");
    if (!r.paths_ok()) o.fail("p=" + std::to_string(p) + " path counts");
  }
  const double s = since(t0);
  if (s >= 60) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.note = "p in {3,5,7,11,13}";
  return o;
}

// 2. partition identity over every labeled graph on <= 6 vertices
Outcome partition_identity() {
  Outcome o;
  const auto t0 = Clock::now();
  SuiteOptions opt;
  opt.exhaustive = true;
  const auto rep = run_suite("partition-identity", opt);
  std::int64_t graphs = 0;
  for (int n = 1; n <= 6; ++n) graphs += std::int64_t{1} << (n * (n - 1) / 2);
  if (rep.attempts != 2 * graphs) o.fail("covered " + std::to_string(rep.attempts) + " cases");
  if (rep.failed != 0) o.fail(std::to_string(rep.failed) + " mismatches");
  const double s = since(t0);
  if (s >= 600) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.note = std::to_string(rep.attempts) + " (graph, k) cases";
  return o;
}

const std::vector<Pattern>& targets() {
  static const std::vector<Pattern> t{Pattern::cycle(3), Pattern::cycle(4), Pattern::cycle(5), Pattern::path(2),
                                      Pattern::path(3)};
  return t;
}

// 3 and 4 share the n = 7, 8 computations.
std::vector<ExtremalRecord> c5_seven;

Outcome exact_values() {
  Outcome o;
  int cells = 0;
  for (int n = 1; n <= 6; ++n) {
    const auto table = oracle::naive_ex_table(n);
    for (std::size_t ti = 0; ti < targets().size(); ++ti)
      for (int l = 3; l <= 7; ++l) {
        const auto r = brute_force_ex(n, targets()[ti], {l});
        ++cells;
        if (r.value != table.value[ti][l - 3] || !verify_record(r))
          o.fail("n=" + std::to_string(n) + " " + targets()[ti].name() + " C" + std::to_string(l));
      }
  }
  if (brute_force_ex(5, Pattern::cycle(3), {5}).value != 4) o.fail("ex(5,C3,{5}) != 4");
  if (brute_force_ex(6, Pattern::cycle(4), {3}).value != 9) o.fail("ex(6,C4,{3}) != 9");

  double worst7 = 0;
  double worst8 = 0;
  for (int n : {7, 8}) {
    for (const auto& t : targets())
      for (int l = 3; l <= 7; ++l) {
        const auto t0 = Clock::now();
        const auto r = brute_force_ex(n, t, {l});
        const double s = since(t0);
        if (!verify_record(r)) o.fail("witness check n=" + std::to_string(n));
        (n == 7 ? worst7 : worst8) = std::max(n == 7 ? worst7 : worst8, s);
        if (t == Pattern::cycle(5) && l == 7) c5_seven.push_back(r);
      }
  }
  if (worst7 >= 60) o.fail("slowest n=7 cell " + std::to_string(worst7) + " s");
  if (worst8 >= 3600) o.fail("slowest n=8 cell " + std::to_string(worst8) + " s");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d oracle cells; slowest n=7 cell %.2f s, n=8 cell %.2f s", cells, worst7, worst8);
  if (o.pass) o.note = buf;
  return o;
}

// 4. ex(n, C5, {7}) <= 20000 n^2 for every computed n <= 8
Outcome explicit_constant() {
  Outcome o;
  std::vector<ExtremalRecord> all;
  for (int n = 1; n <= 6; ++n) all.push_back(brute_force_ex(n, Pattern::cycle(5), {7}));
  for (const auto& r : c5_seven) all.push_back(r);
  if (all.size() != 8) o.fail("only " + std::to_string(all.size()) + " values computed");
  std::string values;
  for (const auto& r : all) {
    const std::uint64_t bound = 20000ULL * static_cast<std::uint64_t>(r.n) * static_cast<std::uint64_t>(r.n);
    if (!(r.value < bound)) o.fail("n=" + std::to_string(r.n));
    values += (values.empty() ? "" : ",") + std::to_string(r.value);
  }
  if (o.pass) o.note = "values n=1..8: " + values;
  return o;
}

// 5. randomized suites at 10^4 applicable instances
Outcome suites() {
  Outcome o;
  const auto t0 = Clock::now();
  std::string summary;
  for (const char* name :
       {"consecutive-odd", "lambda-path", "forbidden-cycles", "p2", "triangle", "erdos-gallai", "zarankiewicz"}) {
    SuiteOptions opt;
    opt.trials = 10000;
    opt.seed = 1;
    const auto rep = run_suite(name, opt);
    if (rep.failed != 0) o.fail(std::string(name) + ": " + std::to_string(rep.failed) + " violations");
    if (rep.applicable < 10000) o.fail(std::string(name) + ": " + std::to_string(rep.applicable) + " applicable");
    summary += std::string(summary.empty() ? "" : ", ") + name + " " + std::to_string(rep.applicable);
  }
  const double s = since(t0);
  if (s >= 1800) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.note = summary;
  return o;
}

// 6. distance of the balanced C5 blow-up to bipartiteness
Outcome blowup_distance() {
  Outcome o;
  for (int m = 1; m <= 5; ++m) {
    const Graph g = blow_up(cycle_graph(5), std::vector<int>(5, m)).graph;
    const auto d = bipartite_distance(g);
    if (d.edges_to_remove != static_cast<std::int64_t>(m) * m) o.fail("m=" + std::to_string(m));
    if (!(d.farness >= 1.0 / 50)) o.fail("m=" + std::to_string(m) + " farness below 1/50");
  }
  if (o.pass) o.note = "m = 1..5";
  return o;
}

// 7. one-sided vs two-sided sample sizes
Outcome separation() {
  Outcome o;
  const auto t0 = Clock::now();
  TesterConfig config;
  config.epsilon = 1.0 / 50;
  const std::vector<int> l2{101, 501, 1001};
  const auto rep = separation_experiment(l2, config);
  if (!rep.floors_match) o.fail("a one-sided floor differs from l2");
  std::string qs;
  for (const auto& row : rep.rows) {
    if (!row.one_sided_grid_all_zero) o.fail("l2=" + std::to_string(row.l2) + " one-sided rejection below l2");
    if (!row.two_sided.q) {
      o.fail("l2=" + std::to_string(row.l2) + " no two-sided q found");
      continue;
    }
    if (*row.two_sided.q >= 1000) o.fail("l2=" + std::to_string(row.l2) + " q=" + std::to_string(*row.two_sided.q));
    qs += (qs.empty() ? "" : ", ") + std::to_string(row.l2) + ": [" + std::to_string(row.two_sided.q_low.value_or(0)) +
          ", " + std::to_string(*row.two_sided.q) + "]";
  }
  if (!rep.two_sided_overlap) o.fail("two-sided intervals do not overlap");
  const double s = since(t0);
  if (s >= 7200) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.note = "two-sided q " + qs;
  return o;
}

// 8. manifest replays are byte-identical
std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int cli(const std::string& args, const fs::path& log) {
  const std::string cmd = "\"" TURAN_CLI_PATH "\" " + args + " >\"" + log.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome reproducibility() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / ("turan_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir / "replay");
  const auto at = [&](const std::string& s) { return (dir / s).string(); };
  const std::vector<std::pair<std::string, std::string>> runs{
      {"pol", "construct polarity --p 11"},
      {"cb", "construct cycle-blowup --k 5 --l 7 --m 3"},
      {"tb", "construct triangle-booster --a 6 --b 7 --l 3 --seed 4"},
      {"exact", "ex-search --target C5 --forbid 7 --n 4..7"},
      {"hill", "ex-search --target C4 --forbid 3 --n 6..9 --hill --steps 2000 --restarts 2 --seed 9"},
      {"tri", "verify triangle --trials 300 --seed 2"},
      {"kom", "verify komlos --trials 100 --seed 3"},
      {"sep", "experiment separation --l2 21 --l2 41 --trials 100 --seed 5"},
  };
  int files = 0;
  for (const auto& [stem, args] : runs) {
    if (cli(args + " --out " + at(stem), dir / "log") != 0) {
      o.fail(stem + " run failed");
      continue;
    }
    if (cli("run-manifest " + at(stem + ".manifest.json") + " --out-dir " + at("replay"), dir / "log") != 0) {
      o.fail(stem + " replay failed");
      continue;
    }
    const json m = json::parse(slurp(at(stem + ".manifest.json")));
    for (const auto& out : m.at("outputs")) {
      const fs::path original = out.get<std::string>();
      ++files;
      if (slurp(original) != slurp(dir / "replay" / original.filename())) o.fail(original.filename().string() + " differs");
    }
    if (slurp(at(stem + ".manifest.json")).empty()) o.fail(stem + " manifest empty");
  }
  fs::remove_all(dir);
  if (o.pass) o.note = std::to_string(runs.size()) + " runs, " + std::to_string(files) + " output files identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 polarity graphs", polarity},
      {"2 partition identity (all graphs, n <= 6)", partition_identity},
      {"3 exact extremal values", exact_values},
      {"4 ex(n,C5,{7}) <= 20000 n^2", explicit_constant},
      {"5 randomized inequality suites", suites},
      {"6 C5 blow-up distance = m^2", blowup_distance},
      {"7 separation experiment", separation},
      {"8 manifest reproducibility", reproducibility},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("%s  %-44s %8.1f s  %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), since(t0), o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
