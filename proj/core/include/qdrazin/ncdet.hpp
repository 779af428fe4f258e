#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qdrazin/qmatrix.hpp"

namespace qdrazin {

/// Largest matrix order accepted by any single determinant call. The
/// determinants are sums over all n! permutations, so 8! = 40320 terms.
inline constexpr std::size_t kMaxDeterminantSize = 8;

enum class CycleOrientation {
  /// Row determinant: the anchor opens the leftmost cycle and factors are
  /// multiplied left to right.
  kLeftOrdered,
  /// Column determinant: the anchor closes the rightmost cycle and factors
  /// are multiplied right to left.
  kRightOrdered,
};

/// A permutation written in the ordered cycle notation used by the row and
/// column determinants.
///
/// Each cycle is stored starting from its leader and following the
/// permutation: {leader, p(leader), p(p(leader)), ...}. The first cycle is
/// led by the anchor; the remaining cycles are led by their smallest element
/// and sorted by it. Fixed points are 1-cycles. Indices are 1-based.
struct OrderedCycleDecomposition {
  std::vector<std::vector<std::size_t>> cycles;
  /// n - (number of cycles); the term sign is (-1)^sign_exponent.
  std::size_t sign_exponent = 0;
  CycleOrientation orientation = CycleOrientation::kLeftOrdered;
};

/// Decomposes `permutation` (1-based images, permutation[x-1] = p(x)) with
/// `anchor` leading the first cycle.
OrderedCycleDecomposition ordered_cycles(const std::vector<std::size_t>& permutation,
                                         std::size_t anchor, CycleOrientation orientation);

/// The signed entry product contributed by one permutation. For the
/// left-ordered form each cycle (c0 c1 ... cl) contributes a[c0,c1] a[c1,c2]
/// ... a[cl,c0] appended on the right; for the right-ordered form it
/// contributes a[c1,c0], a[c2,c1], ..., a[c0,cl], each prepended on the left.
Quaternion cycle_term(const QMatrix& a, const OrderedCycleDecomposition& decomposition);

/// i-th row determinant.
Quaternion rdet(const QMatrix& a, std::size_t i);
/// j-th column determinant.
Quaternion cdet(const QMatrix& a, std::size_t j);

/// Determinant of a Hermitian matrix: the common real value of every row
/// and column determinant.
Rational hdet(const QMatrix& a);

/// Right ij-th cofactor: rdet_i(a) = sum_j a(i,j) * R_ij.
Quaternion cofactor_right(const QMatrix& a, std::size_t i, std::size_t j);
/// Left ij-th cofactor: cdet_j(a) = sum_i L_ij * a(i,j).
Quaternion cofactor_left(const QMatrix& a, std::size_t i, std::size_t j);

/// Sum of the principal minors of order `order`, restricted to index sets
/// containing `anchor` when given. Order 0 yields 1 (the empty minor).
Rational principal_minor_sum(const QMatrix& a, std::size_t order,
                             std::optional<std::size_t> anchor = std::nullopt);

/// d_1..d_n with det(tI + A) = t^n + d_1 t^(n-1) + ... + d_n, where d_s is
/// the sum of principal minors of order s.
std::vector<Rational> char_coeffs(const QMatrix& a);

/// Largest order of a nonzero principal minor (0 for the zero matrix).
std::size_t rank_pm(const QMatrix& a);

/// Inverse of a nonsingular Hermitian matrix from its right cofactors,
/// cross-checked against the left-cofactor form and A X = X A = I.
QMatrix herm_inverse(const QMatrix& a);

}  // namespace qdrazin
