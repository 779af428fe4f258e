#include "qdrazin/oracle.hpp"

#include <string>
#include <utility>

#include "qdrazin/errors.hpp"

namespace qdrazin {

ComplexRational conj(const ComplexRational& z) { return {z.re, -z.im}; }

ComplexRational inverse(const ComplexRational& z) {
  const Rational n = z.re * z.re + z.im * z.im;
  if (n.is_zero()) throw ZeroDivision("inverse of complex zero");
  return {z.re / n, -z.im / n};
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("complex add");
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("complex multiply");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      ComplexRational acc;
      for (std::size_t s = 0; s < a.cols(); ++s) {
        if (a(r, s).is_zero() || b(s, c).is_zero()) continue;
        acc = acc + a(r, s) * b(s, c);
      }
      out(r, c) = std::move(acc);
    }
  }
  return out;
}

ComplexMatrix conjugate_transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = conj(a(r, c));
  }
  return out;
}

ComplexMatrix embed_complex(const QMatrix& a) {
  ComplexMatrix out(2 * a.rows(), 2 * a.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      const Quaternion& q = a.at_unchecked(i, j);
      const std::size_t r = 2 * (i - 1);
      const std::size_t c = 2 * (j - 1);
      out(r, c) = {q[0], q[1]};
      out(r, c + 1) = {q[2], q[3]};
      out(r + 1, c) = {-q[2], q[3]};
      out(r + 1, c + 1) = {q[0], -q[1]};
    }
  }
  return out;
}

bool is_quaternionic_image(const ComplexMatrix& m) {
  if (m.rows() % 2 != 0 || m.cols() % 2 != 0) return false;
  for (std::size_t r = 0; r < m.rows(); r += 2) {
    for (std::size_t c = 0; c < m.cols(); c += 2) {
      if (m(r + 1, c + 1) != conj(m(r, c))) return false;
      if (m(r + 1, c) != ComplexRational{-m(r, c + 1).re, m(r, c + 1).im}) return false;
    }
  }
  return true;
}

QMatrix unembed_complex(const ComplexMatrix& m) {
  if (!is_quaternionic_image(m) || m.rows() == 0 || m.cols() == 0) {
    throw InternalInconsistency("complex matrix is not the image of a quaternion matrix");
  }
  std::vector<Quaternion> entries;
  entries.reserve(m.rows() * m.cols() / 4);
  for (std::size_t r = 0; r < m.rows(); r += 2) {
    for (std::size_t c = 0; c < m.cols(); c += 2) {
      entries.emplace_back(m(r, c).re, m(r, c).im, m(r, c + 1).re, m(r, c + 1).im);
    }
  }
  return {m.rows() / 2, m.cols() / 2, std::move(entries)};
}

std::size_t complex_rank(ComplexMatrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t t = 0; t < m.cols(); ++t) std::swap(m(pivot, t), m(rank, t));
    }
    const ComplexRational inv = inverse(m(rank, c));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c).is_zero()) continue;
      const ComplexRational factor = m(r, c) * inv;
      for (std::size_t t = c; t < m.cols(); ++t) m(r, t) = m(r, t) - factor * m(rank, t);
    }
    ++rank;
  }
  return rank;
}

std::size_t embedding_rank(const QMatrix& a) {
  const std::size_t rank = complex_rank(embed_complex(a));
  if (rank % 2 != 0) {
    throw InternalInconsistency("complex image has odd rank " + std::to_string(rank));
  }
  return rank / 2;
}

DrazinAxiomReport check_drazin_axioms(const QMatrix& a, const QMatrix& x, std::size_t k) {
  if (!a.is_square() || !x.is_square() || a.rows() != x.rows()) {
    throw DimensionMismatch("Drazin axioms need square matrices of equal order");
  }
  const QMatrix ak = mat_pow(a, k);
  const QMatrix ak1 = mat_mul(ak, a);
  DrazinAxiomReport report;
  report.power_left = mat_mul(ak1, x) == ak;
  report.reflexive = mat_mul(mat_mul(x, a), x) == x;
  report.commuting = mat_mul(a, x) == mat_mul(x, a);
  report.power_right = mat_mul(x, ak1) == ak;
  return report;
}

bool verify_drazin_axioms(const QMatrix& a, const QMatrix& x, std::size_t k) {
  const DrazinAxiomReport r = check_drazin_axioms(a, x, k);
  return r.power_left && r.reflexive && r.commuting;
}

}  // namespace qdrazin
