#include "qdrazin/cramer.hpp"

#include <string>

#include "qdrazin/errors.hpp"

namespace qdrazin {
namespace {

std::string shape(const QMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_hermitian(const QMatrix& a, const char* what) {
  if (!is_hermitian(a)) throw NotHermitian(std::string(what) + " must be Hermitian");
}

}  // namespace

CoefficientSummary summarize(const DrazinFactors& f) {
  return {f.index, f.rank, f.denominator};
}

QMatrix solve_ax(const QMatrix& a, const QMatrix& b, const SolveOptions& options) {
  require_hermitian(a, "coefficient A");
  if (b.rows() != a.rows()) {
    throw DimensionMismatch("A X = B with A " + shape(a) + " and B " + shape(b));
  }
  const DrazinFactors f = drazin_factors(a);
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  if (f.rank == 0) return QMatrix::zero(n, m);

  const QMatrix b_hat = mat_mul(f.power_k, b);
  const Rational scale = reciprocal(f.denominator);
  std::vector<Quaternion> out(n * m);
  for (std::size_t j = 1; j <= m; ++j) {
    const std::vector<Quaternion> col = b_hat.column_at(j);
    for (std::size_t i = 1; i <= n; ++i) {
      out[(i - 1) * m + (j - 1)] = column_bordered_minor_sum(f.power_k1, i, col, f.rank) * scale;
    }
  }
  QMatrix x(n, m, std::move(out));
  if (options.self_check && x != mat_mul(drazin_inverse(a).inverse, b)) {
    throw InternalInconsistency("Cramer solution of A X = B differs from A^D B");
  }
  return x;
}

QMatrix solve_xa(const QMatrix& a, const QMatrix& b, const SolveOptions& options) {
  require_hermitian(a, "coefficient A");
  if (b.cols() != a.rows()) {
    throw DimensionMismatch("X A = B with A " + shape(a) + " and B " + shape(b));
  }
  const DrazinFactors f = drazin_factors(a);
  const std::size_t n = a.rows();
  const std::size_t m = b.rows();
  if (f.rank == 0) return QMatrix::zero(m, n);

  const QMatrix b_check = mat_mul(b, f.power_k);
  const Rational scale = reciprocal(f.denominator);
  std::vector<Quaternion> out(m * n);
  for (std::size_t i = 1; i <= m; ++i) {
    const std::vector<Quaternion> row = b_check.row_at(i);
    for (std::size_t j = 1; j <= n; ++j) {
      out[(i - 1) * n + (j - 1)] = row_bordered_minor_sum(f.power_k1, j, row, f.rank) * scale;
    }
  }
  QMatrix x(m, n, std::move(out));
  if (options.self_check && x != mat_mul(b, drazin_inverse(a).inverse)) {
    throw InternalInconsistency("Cramer solution of X A = B differs from B A^D");
  }
  return x;
}

AxbSolution solve_axb_detailed(const QMatrix& a, const QMatrix& d, const QMatrix& b,
                               const SolveOptions& options) {
  require_hermitian(a, "coefficient A");
  require_hermitian(b, "coefficient B");
  if (d.rows() != a.rows() || d.cols() != b.rows()) {
    throw DimensionMismatch("A X B = D with A " + shape(a) + ", B " + shape(b) + ", D " +
                            shape(d));
  }
  const DrazinFactors fa = drazin_factors(a);
  const DrazinFactors fb = drazin_factors(b);
  const std::size_t n = a.rows();
  const std::size_t m = b.rows();

  const QMatrix d_tilde = mat_mul(mat_mul(fa.power_k, d), fb.power_k);
  AxbSolution sol{QMatrix::zero(n, m), d_tilde, QMatrix::zero(n, m), QMatrix::zero(n, m),
                  summarize(fa), summarize(fb)};
  if (fa.rank == 0 || fb.rank == 0) return sol;

  const Rational scale = reciprocal(fa.denominator * fb.denominator);

  // Column route: d^B_lj = sum_alpha rdet_j((B^(k2+1))_j.(d~_l.)), then
  // border A^(k1+1) with the columns of d^B.
  std::vector<Quaternion> d_b(n * m);
  for (std::size_t l = 1; l <= n; ++l) {
    const std::vector<Quaternion> row = d_tilde.row_at(l);
    for (std::size_t j = 1; j <= m; ++j) {
      d_b[(l - 1) * m + (j - 1)] = row_bordered_minor_sum(fb.power_k1, j, row, fb.rank);
    }
  }
  sol.d_b = QMatrix(n, m, std::move(d_b));

  std::vector<Quaternion> x(n * m);
  for (std::size_t j = 1; j <= m; ++j) {
    const std::vector<Quaternion> col = sol.d_b.column_at(j);
    for (std::size_t i = 1; i <= n; ++i) {
      x[(i - 1) * m + (j - 1)] = column_bordered_minor_sum(fa.power_k1, i, col, fa.rank) * scale;
    }
  }
  sol.x = QMatrix(n, m, std::move(x));
  if (!options.self_check) return sol;

  // Row route: d^A_it = sum_beta cdet_i((A^(k1+1))_.i(d~_.t)), then border
  // B^(k2+1) with the rows of d^A.
  std::vector<Quaternion> d_a(n * m);
  for (std::size_t t = 1; t <= m; ++t) {
    const std::vector<Quaternion> col = d_tilde.column_at(t);
    for (std::size_t i = 1; i <= n; ++i) {
      d_a[(i - 1) * m + (t - 1)] = column_bordered_minor_sum(fa.power_k1, i, col, fa.rank);
    }
  }
  sol.d_a = QMatrix(n, m, std::move(d_a));

  std::vector<Quaternion> y(n * m);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::vector<Quaternion> row = sol.d_a.row_at(i);
    for (std::size_t j = 1; j <= m; ++j) {
      y[(i - 1) * m + (j - 1)] = row_bordered_minor_sum(fb.power_k1, j, row, fb.rank) * scale;
    }
  }
  if (QMatrix(n, m, std::move(y)) != sol.x) {
    throw InternalInconsistency("column and row Cramer routes for A X B = D disagree");
  }
  const QMatrix product =
      mat_mul(mat_mul(drazin_inverse(a).inverse, d), drazin_inverse(b).inverse);
  if (product != sol.x) {
    throw InternalInconsistency("Cramer solution of A X B = D differs from A^D D B^D");
  }
  return sol;
}

}  // namespace qdrazin
