#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "support/oracles.hpp"
#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/cycles.hpp"
#include "turan/maxcut.hpp"
#include "turan/prime_field.hpp"

using namespace turan;

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Max over pairs of |N(u) ∩ N(v)|, by direct scan.
int max_common_neighbours(const Graph& g) {
  int best = 0;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v) {
      int c = 0;
      for (int w = 0; w < g.size(); ++w) c += g.has_edge(u, w) && g.has_edge(v, w);
      best = std::max(best, c);
    }
  return best;
}

}  // namespace

TEST(PrimeField, Arithmetic) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(9));
  const PrimeField f(7);
  EXPECT_EQ(f.mul(3, 5), 1);
  EXPECT_EQ(f.add(4, 5), 2);
  EXPECT_THROW(PrimeField(8), std::invalid_argument);
}

TEST(Polarity, SmallestCase) {
  const auto pg = build_polarity_graph(3);
  EXPECT_EQ(pg.graph.size(), 8);
  for (Vertex v = 0; v < 8; ++v) {
    EXPECT_GE(pg.graph.degree(v), 2);
    EXPECT_LE(pg.graph.degree(v), 3);
  }
  EXPECT_FALSE(contains_cycle_of_length(pg.graph, 4));
  EXPECT_FALSE(oracle::has_cycle(pg.graph, 4));
  EXPECT_LE(pg.loops, 6);
}

TEST(Polarity, GridIsC4FreeWithNearRegularDegrees) {
  for (int p : {3, 5, 7, 11, 13}) {
    const auto pg = build_polarity_graph(p);
    const Graph& g = pg.graph;
    ASSERT_EQ(g.size(), p * p - 1);
    // C4-free is the same as: no two vertices share two neighbours.
    EXPECT_LE(max_common_neighbours(g), 1) << "p=" << p;
    EXPECT_FALSE(contains_cycle_of_length(g, 4)) << "p=" << p;
    for (Vertex v = 0; v < g.size(); ++v) {
      EXPECT_GE(g.degree(v), p - 1);
      EXPECT_LE(g.degree(v), p);
    }
    EXPECT_LE(pg.loops, 2 * p);
    // Degree p - 1 exactly at the looped points.
    int low = 0;
    for (Vertex v = 0; v < g.size(); ++v) low += g.degree(v) == p - 1;
    EXPECT_EQ(low, pg.loops);
  }
  EXPECT_THROW(polarity_graph(8), std::invalid_argument);
  EXPECT_THROW(polarity_graph(2), std::invalid_argument);
}

TEST(Polarity, PathLowerBound) {
  // polarity_graph(3): at least n(q-1)...(q-k)/2 copies of P_k for k <= 2.
  const Graph g = polarity_graph(3);
  EXPECT_GE(count_path_copies(g, 1) * 2, 8u * 2);      // n(q-1)
  EXPECT_GE(count_path_copies(g, 2) * 2, 8u * 2 * 1);  // n(q-1)(q-2)
  EXPECT_EQ(count_path_copies(g, 2), oracle::paths(g, 2));
}

TEST(CycleBlowup, Example) {
  const Graph g = cycle_blowup(5, 3, 4);
  EXPECT_EQ(g.size(), 11);
  EXPECT_FALSE(oracle::has_cycle(g, 3));
  const auto copies = count_cycle_copies(g, 5);
  EXPECT_EQ(copies, oracle::cycles(g, 5));
  EXPECT_GE(copies, 16u);
}

TEST(CycleBlowup, ParameterGrid) {
  for (int k = 3; k <= 7; ++k)
    for (int l : {3, 5, 6, 7, 8, 9}) {
      if (l == k) continue;
      for (int m = 1; m <= 3; ++m) {
        const Graph g = cycle_blowup(k, l, m);
        ASSERT_EQ(g.size(), k / 2 * m + (k + 1) / 2);
        EXPECT_FALSE(oracle::has_cycle(g, l)) << "k=" << k << " l=" << l << " m=" << m;
        EXPECT_FALSE(contains_cycle_of_length(g, l));
        const auto copies = count_cycle_copies(g, k);
        EXPECT_GE(copies, ipow(static_cast<std::uint64_t>(m), k / 2));
        if (g.size() <= 9) {
          EXPECT_EQ(copies, oracle::cycles(g, k));
        }
      }
    }
}

TEST(CycleBlowup, FourCycleTarget) {
  for (int m = 1; m <= 6; ++m) {
    const Graph g = cycle_blowup(4, 6, m);
    EXPECT_FALSE(contains_cycle_of_length(g, 6));
    EXPECT_GE(count_cycle_copies(g, 4), static_cast<std::uint64_t>(m * m));
  }
  EXPECT_FALSE(oracle::has_cycle(cycle_blowup(4, 6, 3), 6));
}

TEST(CycleBlowup, RejectsBadParameters) {
  EXPECT_THROW(cycle_blowup(5, 5, 2), std::invalid_argument);
  EXPECT_THROW(cycle_blowup(5, 4, 2), std::invalid_argument);
  EXPECT_THROW(cycle_blowup(2, 5, 2), std::invalid_argument);
  EXPECT_THROW(cycle_blowup(5, 3, 0), std::invalid_argument);
}

TEST(PathBlowup, Grid) {
  for (int m = 1; m <= 5; ++m) {
    const Graph g = path_blowup(2, 3, m);
    EXPECT_FALSE(contains_cycle_of_length(g, 3));
    EXPECT_GE(count_path_copies(g, 2), static_cast<std::uint64_t>(m * m));
  }
  for (int k = 2; k <= 5; ++k)
    for (int l : {3, 5, 6, 7})
      for (int m = 1; m <= 3; ++m) {
        const Graph g = path_blowup(k, l, m);
        const int exp = (k + 2) / 2;  // ceil((k+1)/2)
        EXPECT_GE(count_path_copies(g, k), ipow(static_cast<std::uint64_t>(m), exp));
        if (g.size() <= 12) {
          EXPECT_FALSE(oracle::has_cycle(g, l)) << "k=" << k << " l=" << l << " m=" << m;
        }
        if (g.size() <= 8) {
          EXPECT_EQ(count_path_copies(g, k), oracle::paths(g, k));
        }
      }
}

TEST(GeneralBlowup, TriangleVersusSevenCycle) {
  EXPECT_EQ(general_blowup_sizes(Pattern::cycle(3), 7, 10), (std::vector<int>{2, 1, 7}));
  const Graph g = general_blowup(Pattern::cycle(3), 7, 10);
  EXPECT_EQ(oracle::cycles(g, 3), 14u);
  EXPECT_FALSE(oracle::has_cycle(g, 7));
  for (int n = 4; n <= 40; ++n) {
    const Graph h = general_blowup(Pattern::cycle(3), 7, n);
    EXPECT_EQ(count_cycle_copies(h, 3), static_cast<std::uint64_t>(2 * (n - 3)));
    EXPECT_FALSE(contains_cycle_of_length(h, 7));
  }
  EXPECT_THROW(general_blowup(Pattern::cycle(5), 5, 20), std::invalid_argument);
  EXPECT_THROW(general_blowup(Pattern::cycle(3), 7, 3), std::invalid_argument);
}

TEST(GeneralBlowup, CountIsProductOfClassSizes) {
  for (int h : {5, 7, 9, 11})
    for (int t = 3; t <= 5; ++t) {
      const Pattern target = Pattern::cycle(t);
      const int budget = h - h / 2 - 1;
      if (budget < t - target.independence_number()) continue;
      const int n = budget + target.independence_number() + 4;
      const auto sizes = general_blowup_sizes(target, h, n);
      const Graph g = general_blowup(target, h, n);
      ASSERT_EQ(g.size(), n);
      EXPECT_FALSE(contains_cycle_of_length(g, h)) << "t=" << t << " h=" << h;
      if (t != 3) continue;  // a triangle in a C3 blow-up takes one vertex per class
      std::uint64_t prod = 1;
      for (int s : sizes) prod *= static_cast<std::uint64_t>(s);
      EXPECT_EQ(count_cycle_copies(g, 3), prod);
    }
}

TEST(TriangleBooster, Examples) {
  BipartiteGraph matching(3, 3);
  for (int i = 0; i < 3; ++i) matching.add_edge(i, i);
  const Graph g = triangle_booster(matching, 3);
  EXPECT_EQ(g.size(), 9);
  EXPECT_EQ(oracle::cycles(g, 3), 3u);
  EXPECT_FALSE(oracle::has_cycle(g, 6));

  BipartiteGraph star(1, 3);
  for (int j = 0; j < 3; ++j) star.add_edge(0, j);
  EXPECT_EQ(count_cycle_copies(triangle_booster(star, 3), 3), 3u);

  BipartiteGraph k22(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) k22.add_edge(i, j);
  EXPECT_THROW(triangle_booster(k22, 3), std::invalid_argument);
}

TEST(TriangleBooster, RandomInputsHaveOneTrianglePerEdge) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    ConstructionSpec spec;
    spec.family = ConstructionFamily::triangle_booster;
    spec.l = 3 + static_cast<int>(seed % 2);
    spec.a = 3 + static_cast<int>(seed % 4);
    spec.b = 4;
    spec.seed = seed;
    const BipartiteGraph input = booster_input(spec);
    const Graph g = build(spec);
    EXPECT_EQ(count_cycle_copies(g, 3), static_cast<std::uint64_t>(input.edge_count()));
    EXPECT_FALSE(contains_cycle_of_length(g, 2 * spec.l));
    if (g.size() <= 12) {
      EXPECT_FALSE(oracle::has_cycle(g, 2 * spec.l));
    }
  }
}

TEST(HardInstance, FiveHundred) {
  const Graph g = hard_L_free_instance(3, 500, false);
  EXPECT_EQ(g.size(), 500);
  EXPECT_EQ(g.edge_count(), 5 * 100 * 100);
  CycleOracle oracle(g);
  EXPECT_FALSE(oracle.contains(3));
  const auto c = oracle.find(101);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(oracle::is_walk(g, *c, true));
  EXPECT_EQ(c->size(), 101u);
}

TEST(HardInstance, TwentyVertexDistance) {
  const Graph g = hard_L_free_instance(3, 20, false);
  EXPECT_EQ(g.edge_count(), 80);
  const auto d = bipartite_distance(g);
  EXPECT_EQ(d.edges_to_remove, 16);
  EXPECT_DOUBLE_EQ(d.farness, 0.04);
  EXPECT_EQ(g.edge_count() - oracle::max_cut(g), 16);
}

TEST(HardInstance, IsolatedVertex) {
  for (int n : {8, 21, 60}) {
    const Graph g = hard_L_free_instance(3, n, true);
    ASSERT_EQ(g.size(), n);
    EXPECT_EQ(g.degree(n - 1), 0);
    EXPECT_TRUE(is_L_free(g, {3, n}));
  }
  EXPECT_THROW(hard_L_free_instance(4, 20, false), std::invalid_argument);
  EXPECT_THROW(hard_L_free_instance(3, 4, false), std::invalid_argument);
}

TEST(Families, ParseAndBuild) {
  for (const char* name : {"polarity", "cycle-blowup", "path-blowup", "general-blowup", "triangle-booster", "hard-L-free"})
    EXPECT_EQ(family_name(parse_family(name)), name);
  EXPECT_THROW(parse_family("petersen"), std::invalid_argument);
  ConstructionSpec spec;
  spec.family = ConstructionFamily::cycle_blowup;
  spec.k = 5;
  spec.l = 3;
  spec.m = 4;
  EXPECT_EQ(build(spec), cycle_blowup(5, 3, 4));
  spec.family = ConstructionFamily::general_blowup;
  spec.target = Pattern::cycle(3);
  spec.l = 7;
  spec.n = 10;
  EXPECT_EQ(build(spec).size(), 10);
}
