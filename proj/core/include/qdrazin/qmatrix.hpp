#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "qdrazin/index_set.hpp"
#include "qdrazin/quaternion.hpp"

namespace qdrazin {

/// Dense row-major quaternion matrix with value semantics.
///
/// Public indexing is 1-based throughout, matching the notation used for
/// anchors and index sets. There is no mutating API: every transformation
/// returns a fresh matrix.
class QMatrix {
 public:
  /// rows x cols zero matrix; both dimensions must be positive.
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries);
  QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static QMatrix column(std::vector<Quaternion> entries);
  static QMatrix row(std::vector<Quaternion> entries);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  /// Entry (i, j), 1-based; bounds-checked.
  [[nodiscard]] const Quaternion& operator()(std::size_t i, std::size_t j) const;
  /// Unchecked 1-based access for inner loops.
  [[nodiscard]] const Quaternion& at_unchecked(std::size_t i, std::size_t j) const {
    return entries_[(i - 1) * cols_ + (j - 1)];
  }
  [[nodiscard]] std::span<const Quaternion> entries() const { return entries_; }

  /// Column j as a vector of length rows().
  [[nodiscard]] std::vector<Quaternion> column_at(std::size_t j) const;
  /// Row i as a vector of length cols().
  [[nodiscard]] std::vector<Quaternion> row_at(std::size_t i) const;

  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Quaternion> entries_;
};

QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
/// Real scaling; real scalars are central so the side does not matter.
QMatrix operator*(const Rational& c, const QMatrix& a);

QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
/// Conjugate transpose.
QMatrix adjoint(const QMatrix& a);
[[nodiscard]] bool is_hermitian(const QMatrix& a);
/// a^power by repeated multiplication; a^0 = I.
QMatrix mat_pow(const QMatrix& a, std::size_t power);

/// Rows selected by `rowsel`, columns by `colsel`, in increasing index order.
QMatrix principal_submatrix(const QMatrix& a, const IndexSet& rowsel, const IndexSet& colsel);
QMatrix principal_submatrix(const QMatrix& a, const IndexSet& sel);

/// Copy of `a` with column j replaced by `b` (length a.rows()).
QMatrix replace_column(const QMatrix& a, std::size_t j, std::span<const Quaternion> b);
/// Copy of `a` with row i replaced by `b` (length a.cols()).
QMatrix replace_row(const QMatrix& a, std::size_t i, std::span<const Quaternion> b);

/// Copy of `a` without row i and column j.
QMatrix delete_row_col(const QMatrix& a, std::size_t i, std::size_t j);

std::ostream& operator<<(std::ostream& os, const QMatrix& m);

}  // namespace qdrazin
