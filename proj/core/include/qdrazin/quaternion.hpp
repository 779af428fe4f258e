#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "qdrazin/rational.hpp"

namespace qdrazin {

/// a0 + a1 i + a2 j + a3 k with exact rational coefficients.
///
/// Multiplication follows Hamilton's convention ij = k, jk = i, ki = j.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(Rational real);  // NOLINT(google-explicit-constructor)
  Quaternion(std::int64_t real) : Quaternion(Rational(real)) {}  // NOLINT
  Quaternion(Rational a0, Rational a1, Rational a2, Rational a3);

  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  [[nodiscard]] const Rational& operator[](std::size_t c) const { return c_[c]; }
  [[nodiscard]] const Rational& real() const { return c_[0]; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_real() const;
  [[nodiscard]] Rational norm2() const;

  Quaternion& operator+=(const Quaternion& rhs);
  Quaternion& operator-=(const Quaternion& rhs);
  /// Right multiplication: *this = *this * rhs.
  Quaternion& operator*=(const Quaternion& rhs);
  /// Scaling by a real rational (central, so side does not matter).
  Quaternion& operator*=(const Rational& rhs);

  friend Quaternion operator+(Quaternion lhs, const Quaternion& rhs) { return lhs += rhs; }
  friend Quaternion operator-(Quaternion lhs, const Quaternion& rhs) { return lhs -= rhs; }
  friend Quaternion operator*(const Quaternion& lhs, const Quaternion& rhs);
  friend Quaternion operator*(Quaternion lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Quaternion operator*(const Rational& lhs, Quaternion rhs) { return rhs *= lhs; }
  friend Quaternion operator-(const Quaternion& q);

  friend bool operator==(const Quaternion&, const Quaternion&) = default;

  /// Human form "a0 + a1 i + a2 j + a3 k" with zero terms dropped, e.g.
  /// "1 - i", "-3/8 k", "0".
  [[nodiscard]] std::string to_string() const;

 private:
  std::array<Rational, 4> c_{};
};

Quaternion conj(const Quaternion& q);
/// conj(q) / norm2(q); throws ZeroDivision for q = 0.
Quaternion inverse(const Quaternion& q);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qdrazin
