#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "qdrazin/qmatrix.hpp"

// Reference row/column determinants straight from the permutation sum:
// std::next_permutation over S_n, cycles recovered by walking each orbit.
// Deliberately shares no code with the library's pruned enumeration.

namespace qdrazin::testing {

namespace detail {

// Orbit of `start` under p, as 0-based indices starting at `start`.
inline std::vector<std::size_t> orbit(const std::vector<std::size_t>& p, std::size_t start) {
  std::vector<std::size_t> out{start};
  for (std::size_t x = p[start]; x != start; x = p[x]) out.push_back(x);
  return out;
}

inline Quaternion walk(const QMatrix& a, const std::vector<std::size_t>& cycle) {
  Quaternion out(1);
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    out *= a(cycle[t] + 1, cycle[(t + 1) % cycle.size()] + 1);
  }
  return out;
}

// Cycles of p: the anchor's orbit first, then the remaining orbits by
// increasing minimum, each starting at that minimum.
inline std::vector<std::vector<std::size_t>> anchored_cycles(const std::vector<std::size_t>& p,
                                                             std::size_t anchor) {
  std::vector<std::vector<std::size_t>> cycles{orbit(p, anchor)};
  std::vector<bool> seen(p.size(), false);
  for (std::size_t x : cycles.front()) seen[x] = true;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    cycles.push_back(orbit(p, x));
    for (std::size_t y : cycles.back()) seen[y] = true;
  }
  return cycles;
}

template <bool kRow>
Quaternion brute(const QMatrix& a, std::size_t anchor) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Quaternion sum;
  do {
    const auto cycles = anchored_cycles(p, anchor - 1);
    Quaternion term(1);
    if (kRow) {
      for (const auto& c : cycles) term *= walk(a, c);
    } else {
      // Anchor cycle rightmost, other cycles by decreasing leader to its left.
      for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) term *= walk(a, *it);
    }
    if ((n - cycles.size()) % 2 == 1) term = -term;
    sum += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

}  // namespace detail

inline Quaternion brute_rdet(const QMatrix& a, std::size_t i) { return detail::brute<true>(a, i); }
inline Quaternion brute_cdet(const QMatrix& a, std::size_t j) { return detail::brute<false>(a, j); }

}  // namespace qdrazin::testing
