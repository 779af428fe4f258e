#include "qdrazin/rational.hpp"

#include <limits>
#include <ostream>

#include "qdrazin/errors.hpp"

namespace qdrazin {
namespace {

bool is_decimal_integer(std::string_view text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text) {
  if (!is_decimal_integer(text)) {
    throw ParseError("not a decimal integer: '" + std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return mpz_class(std::string(text), 10);
}

mpz_class from_int64(std::int64_t v) {
  // mpz_class has no int64 constructor on every platform; go through a string
  // only for the values that do not fit a long.
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
    return mpz_class(static_cast<long>(v));
  }
  return mpz_class(std::to_string(v), 10);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(from_int64(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw ZeroDivision("rational with zero denominator");
  value_ = mpq_class(from_int64(numerator), from_int64(denominator));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  Rational out;
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    out.value_ = mpq_class(parse_integer(text));
    return out;
  }
  mpz_class num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') {
    throw ParseError("denominator must be unsigned: '" + std::string(text) + "'");
  }
  mpz_class den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  out.value_ = mpq_class(num, den);
  out.value_.canonicalize();
  return out;
}

Rational Rational::from_mpq(mpq_class value) {
  Rational out;
  out.value_ = std::move(value);
  out.value_.canonicalize();
  return out;
}

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }
std::string Rational::denominator_string() const { return value_.get_den().get_str(); }

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

bool Rational::fits_int64() const {
  if (!is_integer()) return false;
  static const mpz_class lo(std::to_string(std::numeric_limits<std::int64_t>::min()), 10);
  static const mpz_class hi(std::to_string(std::numeric_limits<std::int64_t>::max()), 10);
  return value_.get_num() >= lo && value_.get_num() <= hi;
}

std::int64_t Rational::to_int64() const {
  if (!fits_int64()) throw Error("rational " + to_string() + " is not an int64");
  return std::stoll(numerator_string());
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw ZeroDivision("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& value) {
  Rational out;
  out.value_ = -value.value_;
  return out;
}

Rational reciprocal(const Rational& value) { return Rational(1) / value; }

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace qdrazin
