#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qdrazin {

class Quaternion;

/// Exact rational number p/q with q > 0 and gcd(|p|, q) = 1.
///
/// Every constructor and arithmetic operation leaves the value in canonical
/// form, so two Rationals are equal exactly when their numerators and
/// denominators are equal.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Parses "p", "-p", "p/q" (decimal integers, no whitespace, q != 0).
  static Rational parse(std::string_view text);
  static Rational from_mpq(mpq_class value);

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  [[nodiscard]] std::string numerator_string() const;
  [[nodiscard]] std::string denominator_string() const;
  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  /// True when the value is an integer representable as int64.
  [[nodiscard]] bool fits_int64() const;
  [[nodiscard]] std::int64_t to_int64() const;

  [[nodiscard]] const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& value);

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  friend class Quaternion;
  friend Quaternion operator*(const Quaternion&, const Quaternion&);
  // GMP arithmetic on canonical operands already yields canonical results.
  struct CanonicalTag {};
  Rational(CanonicalTag, mpq_class value) : value_(std::move(value)) {}

  mpq_class value_{0};
};

Rational reciprocal(const Rational& value);
Rational abs(const Rational& value);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace qdrazin
