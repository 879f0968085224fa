#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "support/oracles.hpp"
#include "turan/constructions.hpp"
#include "turan/graph6.hpp"
#include "turan/serialization.hpp"

#ifndef TURAN_CLI_PATH
#error "TURAN_CLI_PATH must name the turan executable"
#endif

using namespace turan;
namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("turan_cli_" + std::to_string(::getpid()) + "_" + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the CLI with stdout/stderr captured; returns the exit code.
  int run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " \"" TURAN_CLI_PATH "\" " + args + " >\"" + (dir_ / "stdout").string() + "\" 2>\"" +
                            (dir_ / "stderr").string() + "\"";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::string err() const { return slurp(dir_ / "stderr"); }
  std::string out() const { return slurp(dir_ / "stdout"); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ConstructPolarity) {
  ASSERT_EQ(run("construct polarity --p 7 --out " + path("pol")), 0) << err();
  const Graph g = graph6_decode(slurp(path("pol.g6")).substr(0, slurp(path("pol.g6")).find('\n')));
  EXPECT_EQ(g.size(), 48);
  const json side = json::parse(slurp(path("pol.json")));
  EXPECT_EQ(side["properties"]["n"], 48);
  EXPECT_EQ(side["properties"]["edges"], g.edge_count());
  EXPECT_EQ(side["properties"]["free"]["C4"], true);
  EXPECT_EQ(side["discarded_loops"], 8);

  ConstructionSpec spec;
  spec.family = ConstructionFamily::polarity;
  spec.p = 7;
  const json again = construction_properties(g, spec);
  EXPECT_EQ(side["properties"].dump(), again.dump());
  EXPECT_TRUE(fs::exists(path("pol.manifest.json")));
}

TEST_F(Cli, ConstructCycleBlowup) {
  ASSERT_EQ(run("construct cycle-blowup --k 5 --l 3 --m 4 --out " + path("cb")), 0) << err();
  const json side = json::parse(slurp(path("cb.json")));
  const std::string text = slurp(path("cb.g6"));
  const Graph g = graph6_decode(text.substr(0, text.find('\n')));
  EXPECT_EQ(side["properties"]["copies"]["C5"].get<std::uint64_t>(), oracle::cycles(g, 5));
  EXPECT_EQ(side["properties"]["copies"]["C5"], 16);
  EXPECT_EQ(side["properties"]["free"]["C3"], true);
}

TEST_F(Cli, BadInputsExitTwo) {
  EXPECT_EQ(run("construct polarity --p 8 --out " + path("x")), 2);
  EXPECT_NE(err().find("error"), std::string::npos);
  EXPECT_EQ(run("construct no-such-family --out " + path("x")), 2);
  EXPECT_EQ(run("verify no-such-suite --out " + path("x")), 2);
  EXPECT_EQ(run("verify triangle --trials all --out " + path("x")), 2);
  EXPECT_EQ(run("verify triangle --trials ten --out " + path("x")), 2);
  EXPECT_EQ(run("ex-search --target C3 --forbid 5 --n 3..x --out " + path("x")), 2);
  EXPECT_EQ(run("experiment separation --l2 4 --out " + path("x")), 2);
  EXPECT_NE(err().find("L must be odd integers"), std::string::npos);
  EXPECT_EQ(run("experiment separation --l2 9 --out " + path("x"), "TURAN_SEED=abc"), 2);
  EXPECT_EQ(run(""), 2);
  EXPECT_FALSE(fs::exists(path("x.json")));
}

TEST_F(Cli, ExSearchExact) {
  ASSERT_EQ(run("ex-search --target C3 --forbid 5 --n 3..5 --out " + path("ex")), 0) << err();
  std::istringstream csv(slurp(path("ex.csv")));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "n,target,k,forbidden,l,value,exact,method,nodes,trend,witness");
  const auto table = oracle::naive_ex_table(5);
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    ASSERT_GE(cells.size(), 8u);
    const int n = std::stoi(cells[0]);
    EXPECT_EQ(cells[6], "exact");
    EXPECT_EQ(std::stoull(cells[5]), n == 5 ? table.value[0][5 - 3] : oracle::naive_ex_table(n).value[0][5 - 3]) << line;
  }
  EXPECT_EQ(rows, 3);
  std::ifstream g6(path("ex_witnesses.g6"));
  EXPECT_EQ(read_graph6_lines(g6).size(), 3u);
}

TEST_F(Cli, ExSearchEmptyRange) {
  ASSERT_EQ(run("ex-search --target C3 --forbid 5 --n 5..4 --out " + path("ex")), 0) << err();
  EXPECT_EQ(slurp(path("ex.csv")), "n,target,k,forbidden,l,value,exact,method,nodes,trend,witness\n");
}

TEST_F(Cli, VerifyWritesReport) {
  ASSERT_EQ(run("verify triangle --trials 50 --seed 3 --out " + path("tri")), 0) << err();
  const json doc = json::parse(slurp(path("tri.json")));
  EXPECT_EQ(doc["report"]["failed"], 0);
  EXPECT_EQ(doc["report"]["applicable"], 50);
  EXPECT_FALSE(fs::exists(path("tri_counterexamples.g6")));
  EXPECT_EQ(slurp(path("tri.json")).find("seconds"), std::string::npos);
}

TEST_F(Cli, SeedFromEnvironment) {
  ASSERT_EQ(run("verify komlos --trials 20 --out " + path("a"), "TURAN_SEED=42"), 0) << err();
  ASSERT_EQ(run("verify komlos --trials 20 --seed 42 --out " + path("b")), 0) << err();
  const json a = json::parse(slurp(path("a.json")));
  const json b = json::parse(slurp(path("b.json")));
  EXPECT_EQ(a["report"]["seed"], 42);
  EXPECT_EQ(a["report"].dump(), b["report"].dump());
}

TEST_F(Cli, ManifestReplayIsByteIdentical) {
  ASSERT_EQ(run("construct hard-L-free --n 60 --l 9 --out " + path("h")), 0) << err();
  ASSERT_EQ(run("verify consecutive-odd --trials 30 --seed 5 --out " + path("v")), 0) << err();
  ASSERT_EQ(run("ex-search --target C5 --forbid 3 --n 5..6 --hill --steps 300 --restarts 2 --out " + path("e")), 0)
      << err();
  ASSERT_EQ(run("experiment separation --l2 9 --grid 4 --trials 30 --out " + path("s")), 0) << err();
  fs::create_directories(dir_ / "replay");
  for (const std::string stem : {"h", "v", "e", "s"}) {
    const json m = json::parse(slurp(path(stem + ".manifest.json")));
    ASSERT_EQ(run("run-manifest " + path(stem + ".manifest.json") + " --out-dir " + path("replay")), 0) << err();
    ASSERT_FALSE(m["outputs"].empty());
    for (const auto& o : m["outputs"]) {
      const fs::path original = o.get<std::string>();
      const fs::path copy = dir_ / "replay" / original.filename();
      ASSERT_TRUE(fs::exists(copy)) << copy;
      EXPECT_EQ(slurp(original), slurp(copy)) << original;
    }
  }
}
