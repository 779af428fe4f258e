#include "qdrazin/drazin.hpp"

#include <string>

#include "qdrazin/errors.hpp"
#include "qdrazin/ncdet.hpp"
#include "qdrazin/oracle.hpp"

namespace qdrazin {
namespace {

void require_hermitian(const QMatrix& a, const char* op) {
  if (!is_hermitian(a)) throw NotHermitian(std::string(op) + " needs a Hermitian matrix");
}

// Entries of the two determinantal forms. `columns` feeds the column route
// (its j-th column borders column i of A^(k+1)); `rows` feeds the row route.
QMatrix column_route(const DrazinFactors& f, const QMatrix& columns) {
  const std::size_t n = f.power_k1.rows();
  const Rational scale = reciprocal(f.denominator);
  std::vector<Quaternion> out(n * columns.cols());
  for (std::size_t j = 1; j <= columns.cols(); ++j) {
    const std::vector<Quaternion> col = columns.column_at(j);
    for (std::size_t i = 1; i <= n; ++i) {
      out[(i - 1) * columns.cols() + (j - 1)] =
          column_bordered_minor_sum(f.power_k1, i, col, f.rank) * scale;
    }
  }
  return {n, columns.cols(), std::move(out)};
}

QMatrix row_route(const DrazinFactors& f, const QMatrix& rows) {
  const std::size_t n = f.power_k1.rows();
  const Rational scale = reciprocal(f.denominator);
  std::vector<Quaternion> out(rows.rows() * n);
  for (std::size_t i = 1; i <= rows.rows(); ++i) {
    const std::vector<Quaternion> row = rows.row_at(i);
    for (std::size_t j = 1; j <= n; ++j) {
      out[(i - 1) * n + (j - 1)] = row_bordered_minor_sum(f.power_k1, j, row, f.rank) * scale;
    }
  }
  return {rows.rows(), n, std::move(out)};
}

QMatrix inverse_from_factors(const QMatrix& a, const DrazinFactors& f, bool self_check) {
  const std::size_t n = a.rows();
  if (f.rank == 0) return QMatrix::zero(n, n);
  QMatrix x = column_route(f, f.power_k);
  if (!self_check) return x;
  if (row_route(f, f.power_k) != x) {
    throw InternalInconsistency("column- and row-determinant Drazin forms disagree");
  }
  if (!check_drazin_axioms(a, x, f.index).all()) {
    throw InternalInconsistency("determinantal Drazin inverse fails the Drazin identities");
  }
  return x;
}

}  // namespace

std::size_t matrix_index(const QMatrix& a) { return drazin_factors(a).index; }

DrazinFactors drazin_factors(const QMatrix& a) {
  require_hermitian(a, "drazin_factors");
  if (a.rows() > kMaxDeterminantSize) {
    throw SizeCapExceeded("order " + std::to_string(a.rows()) + " exceeds the determinant cap");
  }
  const std::size_t n = a.rows();
  QMatrix power_k = QMatrix::identity(n);
  QMatrix power_k1 = a;
  std::size_t rank_k = n;
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t rank_k1 = rank_pm(power_k1);
    if (rank_k1 == rank_k) {
      Rational denominator = principal_minor_sum(power_k1, rank_k);
      if (rank_k > 0 && denominator.is_zero()) {
        throw InternalInconsistency("vanishing principal-minor sum at rank " +
                                    std::to_string(rank_k));
      }
      return {k, rank_k, std::move(power_k), std::move(power_k1), std::move(denominator)};
    }
    rank_k = rank_k1;
    power_k = power_k1;
    power_k1 = mat_mul(power_k1, a);
  }
  throw InternalInconsistency("rank of powers did not stabilise within the matrix order");
}

Quaternion column_bordered_minor_sum(const QMatrix& m, std::size_t i,
                                     std::span<const Quaternion> column, std::size_t order) {
  const QMatrix bordered = replace_column(m, i, column);
  Quaternion sum;
  if (order == 0) return sum;
  for (const IndexSet& beta : enumerate_index_sets(m.rows(), order, i)) {
    sum += cdet(principal_submatrix(bordered, beta), beta.position_of(i));
  }
  return sum;
}

Quaternion row_bordered_minor_sum(const QMatrix& m, std::size_t j,
                                  std::span<const Quaternion> row, std::size_t order) {
  const QMatrix bordered = replace_row(m, j, row);
  Quaternion sum;
  if (order == 0) return sum;
  for (const IndexSet& alpha : enumerate_index_sets(m.rows(), order, j)) {
    sum += rdet(principal_submatrix(bordered, alpha), alpha.position_of(j));
  }
  return sum;
}

DrazinReport drazin_inverse(const QMatrix& a, const DrazinOptions& options) {
  const DrazinFactors f = drazin_factors(a);
  return {inverse_from_factors(a, f, options.self_check), f.index, f.rank, f.denominator};
}

QMatrix group_inverse(const QMatrix& a, const DrazinOptions& options) {
  const DrazinFactors f = drazin_factors(a);
  if (f.index > 1) {
    throw IndexTooLarge("group inverse needs Ind A <= 1, got " + std::to_string(f.index));
  }
  // The k = 1 instance of the Drazin formula, which also covers Ind A = 0.
  DrazinFactors g{1, f.rank, a, mat_mul(a, a), Rational(1)};
  g.denominator = principal_minor_sum(g.power_k1, g.rank);
  return inverse_from_factors(a, g, options.self_check);
}

DrazinProjectors drazin_projectors(const QMatrix& a, const DrazinOptions& options) {
  const DrazinFactors f = drazin_factors(a);
  const std::size_t n = a.rows();
  if (f.rank == 0) return {QMatrix::zero(n, n), QMatrix::zero(n, n)};
  DrazinProjectors p{column_route(f, f.power_k1), row_route(f, f.power_k1)};
  if (options.self_check) {
    const QMatrix ad = inverse_from_factors(a, f, true);
    if (p.left != mat_mul(ad, a) || p.right != mat_mul(a, ad)) {
      throw InternalInconsistency("determinantal projectors differ from A^D A / A A^D");
    }
    if (mat_mul(p.left, p.left) != p.left || mat_mul(p.right, p.right) != p.right) {
      throw InternalInconsistency("Drazin projectors are not idempotent");
    }
  }
  return p;
}

}  // namespace qdrazin
