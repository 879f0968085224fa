// Polarity graphs for small primes: size, degrees, dropped loops and the
// ratio of edges to n^{3/2} / 2.

#include <cmath>
#include <cstdio>

#include "turan/verification.hpp"

int main() {
  std::printf("%4s %6s %8s %5s %5s %6s %8s\n", "p", "n", "edges", "dmin", "dmax", "loops", "ratio");
  for (int p : {3, 5, 7, 11, 13, 17, 19, 23}) {
    const auto r = turan::polarity_report(p, 2);
    const double ratio = static_cast<double>(r.edges) / (0.5 * std::pow(r.n, 1.5));
    std::printf("%4d %6d %8lld %5d %5d %6d %8.4f%s\n", p, r.n, static_cast<long long>(r.edges), r.min_degree, r.max_degree,
                r.loops, ratio, r.c4_free() ? "" : "  C4!");
  }
}
