#pragma once

#include "qdrazin/qmatrix.hpp"

// Small worked instance of A X B = D with Hermitian A (3x3, index 1,
// rank 2) and B (2x2, index 1, rank 1), and its Drazin-inverse solution.

namespace qdrazin::testing {

inline const Quaternion kI = Quaternion::i();
inline const Quaternion kJ = Quaternion::j();
inline const Quaternion kK = Quaternion::k();

inline QMatrix worked_a() {
  return {{1, kK, -kI}, {-kK, 2, kJ}, {kI, -kJ, 1}};
}

inline QMatrix worked_b() { return {{1, kI}, {-kI, 1}}; }

inline QMatrix worked_d() { return {{1, kI}, {kK, 1}, {1, kJ}}; }

inline Quaternion q(int a0, int a1, int a2, int a3) { return {a0, a1, a2, a3}; }

inline QMatrix worked_a_squared() {
  return {{3, q(0, 0, 0, 4), q(0, -3, 0, 0)},
          {q(0, 0, 0, -4), 6, q(0, 0, 4, 0)},
          {q(0, 3, 0, 0), q(0, 0, -4, 0), 3}};
}

inline QMatrix worked_b_squared() { return {{2, q(0, 2, 0, 0)}, {q(0, -2, 0, 0), 2}}; }

/// A^k1 D B^k2 for the worked instance.
inline QMatrix worked_d_tilde() {
  return {{q(1, -1, 0, 0), q(1, 1, 0, 0)},
          {q(0, -1, 1, 0), q(1, 0, 0, -1)},
          {q(1, 1, 0, 0), q(-1, 1, 0, 0)}};
}

/// 8 X for the Drazin-inverse solution X.
inline QMatrix worked_solution_times_8() {
  return {{q(3, -1, 2, 0), q(1, 3, 0, -2)},
          {q(0, -3, -1, 4), q(3, 0, 4, 1)},
          {q(1, 3, 0, 2), q(-3, 1, 2, 0)}};
}

inline QMatrix worked_solution() {
  return Rational(1, 8) * worked_solution_times_8();
}

inline QMatrix diag(std::initializer_list<Quaternion> entries) {
  const std::size_t n = entries.size();
  std::vector<Quaternion> out(n * n);
  std::size_t t = 0;
  for (const Quaternion& q : entries) {
    out[t * n + t] = q;
    ++t;
  }
  return {n, n, std::move(out)};
}

}  // namespace qdrazin::testing
