#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hankel/errors.hpp"

namespace hankel {

using Integer = mpz_class;

/// Exact signed rational in lowest terms with a positive denominator.
/// Zero is 0/1. Every operation returns a canonical value.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : value_(static_cast<long>(n)) {}  // NOLINT
  Rational(const Integer& n) : value_(n) {}                     // NOLINT
  Rational(const Integer& num, const Integer& den);

  static Rational from_mpq(mpq_class q);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& mpq() const noexcept { return value_; }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  Rational reciprocal() const;

  /// Text form: "n" for integers, "n/d" otherwise.
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// num/den in lowest terms. Throws ZeroDenominator when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses the rational text grammar: optional '-', digits, optional '/' digits.
/// Throws ParseError (column of the offending character) or ZeroDenominator.
Rational parse_rational(std::string_view text);

/// Parses a plain decimal such as "0.5772156649" or "-12.5" exactly.
Rational parse_decimal(std::string_view text);

}  // namespace hankel
