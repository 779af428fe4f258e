#pragma once

#include <cstddef>
#include <vector>

#include "qdrazin/qmatrix.hpp"
#include "qdrazin/rational.hpp"

// Verification helpers that share no code with the determinant machinery:
// everything here works through the complex 2n x 2n representation or
// through plain matrix products.

namespace qdrazin {

/// Gaussian rational re + im * i.
struct ComplexRational {
  Rational re;
  Rational im;

  [[nodiscard]] bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
};

ComplexRational conj(const ComplexRational& z);
/// Throws ZeroDivision for z = 0.
ComplexRational inverse(const ComplexRational& z);

class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  /// 0-based element access.
  [[nodiscard]] const ComplexRational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  ComplexRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<ComplexRational> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix conjugate_transpose(const ComplexMatrix& a);

/// Blockwise q = a + bi + cj + dk -> [[a+bi, c+di], [-c+di, a-bi]].
/// A ring homomorphism with embed(A*) = embed(A)^H.
ComplexMatrix embed_complex(const QMatrix& a);

/// Inverse of embed_complex. Throws InternalInconsistency when a block does
/// not have the quaternionic shape.
QMatrix unembed_complex(const ComplexMatrix& m);

/// True when every 2x2 block has the form [[z, w], [-conj(w), conj(z)]],
/// i.e. m = J conj(m) J^-1 for J = diag([[0, 1], [-1, 0]], ...).
bool is_quaternionic_image(const ComplexMatrix& m);

/// Exact rank over Q(i) by Gaussian elimination; no pivot tolerance.
std::size_t complex_rank(ComplexMatrix m);

/// Quaternion rank of any matrix: rank of its complex image, halved.
/// Throws InternalInconsistency if that rank is odd.
std::size_t embedding_rank(const QMatrix& a);

struct DrazinAxiomReport {
  bool power_left = false;   // A^(k+1) X = A^k
  bool reflexive = false;    // X A X = X
  bool commuting = false;    // A X = X A
  bool power_right = false;  // X A^(k+1) = A^k

  [[nodiscard]] bool all() const { return power_left && reflexive && commuting && power_right; }
};

DrazinAxiomReport check_drazin_axioms(const QMatrix& a, const QMatrix& x, std::size_t k);

/// True iff A^(k+1) X = A^k, X A X = X and A X = X A hold exactly.
bool verify_drazin_axioms(const QMatrix& a, const QMatrix& x, std::size_t k);

}  // namespace qdrazin
