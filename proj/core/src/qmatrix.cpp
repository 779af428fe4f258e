#include "qdrazin/qmatrix.hpp"

#include <ostream>
#include <string>

#include "qdrazin/errors.hpp"

namespace qdrazin {
namespace {

std::string shape(const QMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const QMatrix& a, const QMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": " + shape(a) + " vs " + shape(b));
  }
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) {
    throw DimensionMismatch("expected " + std::to_string(rows * cols) + " entries, got " +
                            std::to_string(entries_.size()));
  }
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) throw DimensionMismatch("matrix dimensions must be positive");
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix out(n, n);
  for (std::size_t t = 0; t < n; ++t) out.entries_[t * n + t] = Quaternion(1);
  return out;
}

QMatrix QMatrix::column(std::vector<Quaternion> entries) {
  const std::size_t n = entries.size();
  return {n, 1, std::move(entries)};
}

QMatrix QMatrix::row(std::vector<Quaternion> entries) {
  const std::size_t n = entries.size();
  return {1, n, std::move(entries)};
}

const Quaternion& QMatrix::operator()(std::size_t i, std::size_t j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw IndexOutOfRange("entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside " + shape(*this));
  }
  return at_unchecked(i, j);
}

std::vector<Quaternion> QMatrix::column_at(std::size_t j) const {
  if (j < 1 || j > cols_) throw IndexOutOfRange("column " + std::to_string(j));
  std::vector<Quaternion> out;
  out.reserve(rows_);
  for (std::size_t i = 1; i <= rows_; ++i) out.push_back(at_unchecked(i, j));
  return out;
}

std::vector<Quaternion> QMatrix::row_at(std::size_t i) const {
  if (i < 1 || i > rows_) throw IndexOutOfRange("row " + std::to_string(i));
  auto first = entries_.begin() + static_cast<std::ptrdiff_t>((i - 1) * cols_);
  return {first, first + static_cast<std::ptrdiff_t>(cols_)};
}

bool QMatrix::is_zero() const {
  for (const auto& q : entries_) {
    if (!q.is_zero()) return false;
  }
  return true;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b, "add");
  std::vector<Quaternion> out(a.entries().begin(), a.entries().end());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] += b.entries()[t];
  return {a.rows(), a.cols(), std::move(out)};
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b, "subtract");
  std::vector<Quaternion> out(a.entries().begin(), a.entries().end());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] -= b.entries()[t];
  return {a.rows(), a.cols(), std::move(out)};
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) { return mat_mul(a, b); }

QMatrix operator*(const Rational& c, const QMatrix& a) {
  std::vector<Quaternion> out(a.entries().begin(), a.entries().end());
  for (auto& q : out) q *= c;
  return {a.rows(), a.cols(), std::move(out)};
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("multiply: " + shape(a) + " by " + shape(b));
  }
  std::vector<Quaternion> out(a.rows() * b.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= b.cols(); ++j) {
      Quaternion acc;
      for (std::size_t s = 1; s <= a.cols(); ++s) {
        const Quaternion& x = a.at_unchecked(i, s);
        const Quaternion& y = b.at_unchecked(s, j);
        if (x.is_zero() || y.is_zero()) continue;
        acc += x * y;
      }
      out[(i - 1) * b.cols() + (j - 1)] = std::move(acc);
    }
  }
  return {a.rows(), b.cols(), std::move(out)};
}

QMatrix adjoint(const QMatrix& a) {
  std::vector<Quaternion> out(a.rows() * a.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      out[(j - 1) * a.rows() + (i - 1)] = conj(a.at_unchecked(i, j));
    }
  }
  return {a.cols(), a.rows(), std::move(out)};
}

bool is_hermitian(const QMatrix& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = i; j <= a.cols(); ++j) {
      if (a.at_unchecked(j, i) != conj(a.at_unchecked(i, j))) return false;
    }
  }
  return true;
}

QMatrix mat_pow(const QMatrix& a, std::size_t power) {
  if (!a.is_square()) throw DimensionMismatch("power of non-square " + shape(a));
  QMatrix out = QMatrix::identity(a.rows());
  for (std::size_t t = 0; t < power; ++t) out = mat_mul(out, a);
  return out;
}

QMatrix principal_submatrix(const QMatrix& a, const IndexSet& rowsel, const IndexSet& colsel) {
  if (rowsel.ambient() > a.rows() || colsel.ambient() > a.cols()) {
    throw IndexOutOfRange("index set ambient exceeds " + shape(a));
  }
  if (rowsel.empty() || colsel.empty()) throw DimensionMismatch("empty selection");
  std::vector<Quaternion> out;
  out.reserve(rowsel.size() * colsel.size());
  for (std::size_t i : rowsel) {
    for (std::size_t j : colsel) out.push_back(a.at_unchecked(i, j));
  }
  return {rowsel.size(), colsel.size(), std::move(out)};
}

QMatrix principal_submatrix(const QMatrix& a, const IndexSet& sel) {
  return principal_submatrix(a, sel, sel);
}

QMatrix replace_column(const QMatrix& a, std::size_t j, std::span<const Quaternion> b) {
  if (j < 1 || j > a.cols()) throw IndexOutOfRange("column " + std::to_string(j));
  if (b.size() != a.rows()) {
    throw DimensionMismatch("replacement column has " + std::to_string(b.size()) +
                            " entries, matrix has " + std::to_string(a.rows()) + " rows");
  }
  std::vector<Quaternion> out(a.entries().begin(), a.entries().end());
  for (std::size_t i = 1; i <= a.rows(); ++i) out[(i - 1) * a.cols() + (j - 1)] = b[i - 1];
  return {a.rows(), a.cols(), std::move(out)};
}

QMatrix replace_row(const QMatrix& a, std::size_t i, std::span<const Quaternion> b) {
  if (i < 1 || i > a.rows()) throw IndexOutOfRange("row " + std::to_string(i));
  if (b.size() != a.cols()) {
    throw DimensionMismatch("replacement row has " + std::to_string(b.size()) +
                            " entries, matrix has " + std::to_string(a.cols()) + " columns");
  }
  std::vector<Quaternion> out(a.entries().begin(), a.entries().end());
  for (std::size_t j = 1; j <= a.cols(); ++j) out[(i - 1) * a.cols() + (j - 1)] = b[j - 1];
  return {a.rows(), a.cols(), std::move(out)};
}

QMatrix delete_row_col(const QMatrix& a, std::size_t i, std::size_t j) {
  if (i < 1 || i > a.rows() || j < 1 || j > a.cols()) {
    throw IndexOutOfRange("delete (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  if (a.rows() == 1 || a.cols() == 1) throw DimensionMismatch("deletion leaves an empty matrix");
  std::vector<Quaternion> out;
  out.reserve((a.rows() - 1) * (a.cols() - 1));
  for (std::size_t r = 1; r <= a.rows(); ++r) {
    if (r == i) continue;
    for (std::size_t c = 1; c <= a.cols(); ++c) {
      if (c != j) out.push_back(a.at_unchecked(r, c));
    }
  }
  return {a.rows() - 1, a.cols() - 1, std::move(out)};
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
  os << "[";
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    os << (i == 1 ? "[" : ", [");
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      if (j > 1) os << ", ";
      os << m.at_unchecked(i, j);
    }
    os << "]";
  }
  return os << "]";
}

}  // namespace qdrazin
