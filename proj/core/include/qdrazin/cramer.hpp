#pragma once

#include "qdrazin/drazin.hpp"
#include "qdrazin/qmatrix.hpp"

namespace qdrazin {

struct SolveOptions {
  /// Evaluate both determinantal routes and compare with the product of
  /// Drazin inverses; raise InternalInconsistency on any mismatch.
  bool self_check = true;
};

/// Index, rank and minor-sum denominator of one coefficient matrix.
struct CoefficientSummary {
  std::size_t index = 0;
  std::size_t rank = 0;
  Rational denominator;
};

/// X = A^D B for A X = B with A Hermitian n x n and B n x m:
/// x_ij = sum_{beta in J_{r,n}{i}} cdet_i((A^(k+1))_.i(b^_.j))_beta^beta / d_r,
/// where b^_.j is column j of A^k B.
QMatrix solve_ax(const QMatrix& a, const QMatrix& b, const SolveOptions& options = {});

/// X = B A^D for X A = B with A Hermitian n x n and B m x n:
/// x_ij = sum_{alpha in I_{r,n}{j}} rdet_j((A^(k+1))_j.(b~_i.))_alpha^alpha / d_r,
/// where b~_i. is row i of B A^k.
QMatrix solve_xa(const QMatrix& a, const QMatrix& b, const SolveOptions& options = {});

struct AxbSolution {
  QMatrix x;
  /// D~ = A^k1 D B^k2.
  QMatrix d_tilde;
  /// Column j is the auxiliary column vector d^B_.j (row-determinant sums
  /// over B^(k2+1)); n x m.
  QMatrix d_b;
  /// Row i is the auxiliary row vector d^A_i. (column-determinant sums over
  /// A^(k1+1)); n x m.
  QMatrix d_a;
  CoefficientSummary a;
  CoefficientSummary b;
};

/// X = A^D D B^D for A X B = D with A (n x n) and B (m x m) Hermitian.
///
/// Both routes are computed: the column route borders A^(k1+1) with the
/// columns of d^B, the row route borders B^(k2+1) with the rows of d^A, and
/// both divide by d_r1(A) * d_r2(B). With self-checking on they must agree
/// with each other and with A^D D B^D.
AxbSolution solve_axb_detailed(const QMatrix& a, const QMatrix& d, const QMatrix& b,
                               const SolveOptions& options = {});

inline QMatrix solve_axb(const QMatrix& a, const QMatrix& d, const QMatrix& b,
                         const SolveOptions& options = {}) {
  return solve_axb_detailed(a, d, b, options).x;
}

CoefficientSummary summarize(const DrazinFactors& f);

}  // namespace qdrazin
