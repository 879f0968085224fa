#ifndef TURAN_ODD_CYCLE_SETS_HPP
#define TURAN_ODD_CYCLE_SETS_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace turan {

// Independent sets of the cycle C_m with vertices labelled 1..m and edges
// {i, i+1} plus {m, 1}.

inline bool is_independent_in_cycle(int m, const std::vector<int>& set) {
  std::vector<char> in(static_cast<std::size_t>(m) + 1, 0);
  for (int v : set) {
    if (v < 1 || v > m || in[static_cast<std::size_t>(v)]) return false;
    in[static_cast<std::size_t>(v)] = 1;
  }
  for (int v = 1; v <= m; ++v)
    if (in[static_cast<std::size_t>(v)] && in[static_cast<std::size_t>(v % m + 1)]) return false;
  return true;
}

/// All nonempty independent sets of C_m as sorted label lists.
inline std::vector<std::vector<int>> cycle_independent_sets(int m) {
  if (m < 3 || m > 30) throw std::invalid_argument("cycle_independent_sets: need 3 <= m <= 30");
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    const std::uint32_t rot = ((mask << 1) | (mask >> (m - 1))) & ((1U << m) - 1);
    if (mask & rot) continue;
    std::vector<int> s;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1U) s.push_back(i + 1);
    out.push_back(std::move(s));
  }
  return out;
}

/// Extends a nonempty independent set J of C_{2k+1} to an independent set I
/// whose cyclically consecutive elements are 2 or 3 apart, every 3-gap having
/// an endpoint in J.
///
/// Singleton J = {j}: I = {j, j+2, ..., j+2(k-1)} (one 3-gap, closing at j).
/// Otherwise, between consecutive elements a, b of J walk a+2, a+4, ... and
/// stop on reaching b or b-1.
inline std::vector<int> extend_independent_set_on_odd_cycle(int k, std::vector<int> J) {
  if (k < 2) throw std::invalid_argument("extend_independent_set: need k >= 2");
  const int m = 2 * k + 1;
  if (J.empty()) throw std::invalid_argument("extend_independent_set: J is empty");
  if (!is_independent_in_cycle(m, J)) throw std::invalid_argument("extend_independent_set: J is not independent in the cycle");
  std::sort(J.begin(), J.end());
  auto wrap = [m](int x) { return (x - 1) % m + 1; };

  std::vector<int> I;
  if (J.size() == 1) {
    for (int t = 0; t < k; ++t) I.push_back(wrap(J[0] + 2 * t));
  } else {
    for (std::size_t i = 0; i < J.size(); ++i) {
      const int a = J[i];
      const int b = i + 1 < J.size() ? J[i + 1] : J[0] + m;
      I.push_back(a);
      for (int c = a + 2; c != b && c != b - 1; c += 2) I.push_back(wrap(c));
    }
  }
  std::sort(I.begin(), I.end());
  return I;
}

}  // namespace turan

#endif  // TURAN_ODD_CYCLE_SETS_HPP
