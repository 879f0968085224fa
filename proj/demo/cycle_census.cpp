// Reads graph6 lines from stdin; prints n, e, odd girth and C3..C7 counts per graph.
//   ./demo_cycle_census < graphs.g6

#include <cstdio>
#include <iostream>

#include "turan/counting.hpp"
#include "turan/cycles.hpp"
#include "turan/graph6.hpp"

int main() {
  try {
    const auto graphs = turan::read_graph6_lines(std::cin);
    std::printf("%4s %6s %6s %10s %10s %10s %10s %10s\n", "n", "e", "ogirth", "C3", "C4", "C5", "C6", "C7");
    for (const auto& g : graphs) {
      turan::CycleOracle oracle(g);
      std::printf("%4d %6lld %6d", g.size(), static_cast<long long>(g.edge_count()), oracle.odd_girth());
      for (int k = 3; k <= 7; ++k) std::printf(" %10llu", static_cast<unsigned long long>(turan::count_cycle_copies(g, k)));
      std::printf("\n");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
