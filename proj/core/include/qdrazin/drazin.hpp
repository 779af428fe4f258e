#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qdrazin/qmatrix.hpp"
#include "qdrazin/rational.hpp"

namespace qdrazin {

struct DrazinOptions {
  /// Evaluate both the column- and row-determinant forms and verify the
  /// Drazin identities on the result. Off only for benchmarking.
  bool self_check = true;
};

/// Quantities shared by every determinantal formula for a Hermitian A.
struct DrazinFactors {
  std::size_t index = 0;  // k = Ind A
  std::size_t rank = 0;   // r = rank A^k = rank A^(k+1)
  QMatrix power_k;        // A^k
  QMatrix power_k1;       // A^(k+1)
  /// d_r: sum of the principal minors of A^(k+1) of order r. Equals 1 when
  /// r = 0 (the leading coefficient of det(tI + A^(k+1))).
  Rational denominator;
};

struct DrazinReport {
  QMatrix inverse;
  std::size_t index = 0;
  std::size_t rank = 0;
  Rational denominator;
};

/// Smallest k >= 0 with rank A^(k+1) = rank A^k, ranks taken by principal
/// minors. A must be Hermitian.
std::size_t matrix_index(const QMatrix& a);

DrazinFactors drazin_factors(const QMatrix& a);

/// Sum over index sets beta of order `order` containing i of
/// cdet_i( (M with column i replaced by `column`) restricted to beta x beta ),
/// where the anchor i is renumbered to its position inside beta.
Quaternion column_bordered_minor_sum(const QMatrix& m, std::size_t i,
                                     std::span<const Quaternion> column, std::size_t order);

/// Row analogue: sum over alpha containing j of
/// rdet_j( (M with row j replaced by `row`) restricted to alpha x alpha ).
Quaternion row_bordered_minor_sum(const QMatrix& m, std::size_t j,
                                  std::span<const Quaternion> row, std::size_t order);

/// Drazin inverse of a Hermitian matrix by the determinantal formula
///
///   a^D_ij = sum_{beta in J_{r,n}{i}} cdet_i((A^(k+1))_.i(a^(k)_.j))_beta^beta / d_r
///
/// With self-checking on, the row-determinant form
///
///   a^D_ij = sum_{alpha in I_{r,n}{j}} rdet_j((A^(k+1))_j.(a^(k)_i.))_alpha^alpha / d_r
///
/// is evaluated too; any entrywise disagreement, or a failure of
/// A^(k+1)X = A^k, XAX = X, AX = XA, XA^(k+1) = A^k, raises
/// InternalInconsistency. r = 0 gives the zero matrix.
DrazinReport drazin_inverse(const QMatrix& a, const DrazinOptions& options = {});

/// Group inverse (the Drazin inverse for Ind A <= 1) from the k = 1 formula.
/// Throws IndexTooLarge when Ind A > 1.
QMatrix group_inverse(const QMatrix& a, const DrazinOptions& options = {});

struct DrazinProjectors {
  QMatrix left;   // A^D A
  QMatrix right;  // A A^D
};

/// A^D A and A A^D from the bordered formulas fed with columns (resp. rows)
/// of A^(k+1). The self-check compares them with the direct products and
/// checks idempotence.
DrazinProjectors drazin_projectors(const QMatrix& a, const DrazinOptions& options = {});

struct LimitSample {
  double lambda = 0;
  /// max-entry |(lambda I + A^(k+1))^-1 A^k - A^D|
  double left_residual = 0;
  /// max-entry |A^k (lambda I + A^(k+1))^-1 - A^D|
  double right_residual = 0;
  /// 1 + max-entry |A^D|
  double scale = 1;

  [[nodiscard]] double residual() const {
    return left_residual > right_residual ? left_residual : right_residual;
  }
  [[nodiscard]] double relative_residual() const { return residual() / scale; }
};

/// Floating-point check of the limit representation: both shifted products
/// are evaluated in double precision through the complex embedding and
/// compared with the exact Drazin inverse. Throws NumericalFailure if a
/// shifted matrix is numerically singular.
std::vector<LimitSample> limit_check(const QMatrix& a, std::span<const double> lambdas);

/// True when residuals do not increase along the samples (strictly decrease
/// when `strict`).
bool residuals_decreasing(std::span<const LimitSample> samples, bool strict);

}  // namespace qdrazin
