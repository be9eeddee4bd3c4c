#include "hankel/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace hankel {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ZeroDenominator();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  Rational r;
  r.value_ = std::move(q);
  return r;
}

Rational Rational::abs() const { return from_mpq(::abs(value_)); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw ZeroDenominator();
  return from_mpq(mpq_class(value_.get_den(), value_.get_num()));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ZeroDenominator();
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return from_mpq(-value_); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational make_rational(const Integer& num, const Integer& den) { return Rational(num, den); }

namespace {

// Consumes a nonempty run of digits starting at pos; returns the end position.
std::size_t scan_digits(std::string_view text, std::size_t pos, const char* what) {
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) {
    throw ParseError(std::string("expected digits for ") + what + " in \"" + std::string(text) +
                         "\"",
                     1, start + 1);
  }
  return pos;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  const std::size_t num_end = scan_digits(text, pos, "numerator");
  Integer num(std::string(text.substr(pos, num_end - pos)), 10);
  Integer den = 1;
  pos = num_end;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_end = scan_digits(text, pos, "denominator");
    den = Integer(std::string(text.substr(pos, den_end - pos)), 10);
    pos = den_end;
  }
  if (pos != text.size()) {
    throw ParseError("unexpected character in rational \"" + std::string(text) + "\"", 1, pos + 1);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Rational parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t int_end = scan_digits(text, pos, "integer part");
  std::string digits(text.substr(pos, int_end - pos));
  std::size_t frac = 0;
  pos = int_end;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::size_t frac_end = scan_digits(text, pos, "fraction");
    digits += text.substr(pos, frac_end - pos);
    frac = frac_end - pos;
    pos = frac_end;
  }
  if (pos != text.size()) {
    throw ParseError("unexpected character in decimal \"" + std::string(text) + "\"", 1, pos + 1);
  }
  Integer num(digits, 10);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
  if (negative) num = -num;
  return Rational(num, den);
}

}  // namespace hankel
