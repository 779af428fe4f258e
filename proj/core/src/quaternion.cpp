#include "qdrazin/quaternion.hpp"

#include <ostream>

#include "qdrazin/errors.hpp"

namespace qdrazin {

Quaternion::Quaternion(Rational real) : c_{std::move(real), 0, 0, 0} {}

Quaternion::Quaternion(Rational a0, Rational a1, Rational a2, Rational a3)
    : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

bool Quaternion::is_zero() const {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool Quaternion::is_real() const {
  return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

Rational Quaternion::norm2() const {
  return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

Quaternion& Quaternion::operator+=(const Quaternion& rhs) {
  for (std::size_t t = 0; t < 4; ++t) c_[t] += rhs.c_[t];
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& rhs) {
  for (std::size_t t = 0; t < 4; ++t) c_[t] -= rhs.c_[t];
  return *this;
}

Quaternion& Quaternion::operator*=(const Quaternion& rhs) {
  *this = *this * rhs;
  return *this;
}

Quaternion& Quaternion::operator*=(const Rational& rhs) {
  for (auto& c : c_) c *= rhs;
  return *this;
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  // Works on the raw mpq values to avoid temporaries in the hot loop of the
  // determinant enumeration.
  const mpq_class& a0 = p.c_[0].raw();
  const mpq_class& a1 = p.c_[1].raw();
  const mpq_class& a2 = p.c_[2].raw();
  const mpq_class& a3 = p.c_[3].raw();
  const mpq_class& b0 = q.c_[0].raw();
  const mpq_class& b1 = q.c_[1].raw();
  const mpq_class& b2 = q.c_[2].raw();
  const mpq_class& b3 = q.c_[3].raw();
  Quaternion out;
  out.c_[0] = Rational(Rational::CanonicalTag{}, a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3);
  out.c_[1] = Rational(Rational::CanonicalTag{}, a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2);
  out.c_[2] = Rational(Rational::CanonicalTag{}, a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1);
  out.c_[3] = Rational(Rational::CanonicalTag{}, a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0);
  return out;
}

Quaternion operator-(const Quaternion& q) {
  return {-q.c_[0], -q.c_[1], -q.c_[2], -q.c_[3]};
}

std::string Quaternion::to_string() const {
  static constexpr const char* kUnits[4] = {"", "i", "j", "k"};
  std::string out;
  for (std::size_t t = 0; t < 4; ++t) {
    const Rational& c = c_[t];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t == 0) {
      out += mag.to_string();
    } else {
      if (mag != Rational(1)) out += mag.to_string() + " ";
      out += kUnits[t];
    }
  }
  return out.empty() ? "0" : out;
}

Quaternion conj(const Quaternion& q) { return {q[0], -q[1], -q[2], -q[3]}; }

Quaternion inverse(const Quaternion& q) {
  if (q.is_zero()) throw ZeroDivision("inverse of the zero quaternion");
  return conj(q) * reciprocal(q.norm2());
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << q.to_string(); }

}  // namespace qdrazin
