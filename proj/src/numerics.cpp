#include "hankel/numerics.hpp"

#include <algorithm>

namespace hankel {

DecimalString to_decimal(const Rational& r, std::size_t digits, RoundMode mode) {
  if (digits == 0) throw InvalidArgument("to_decimal: digits must be >= 1");

  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);

  Integer num = ::abs(r.numerator()) * scale;
  const Integer den = r.denominator();
  Integer q;
  Integer rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (mode == RoundMode::round_half_away && 2 * rem >= den) q += 1;

  std::string body = q.get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  const std::string int_part = body.substr(0, body.size() - digits);
  const std::string frac_part = body.substr(body.size() - digits);

  std::string text;
  if (r.sign() < 0 && q != 0) text += '-';
  text += int_part;
  text += '.';
  text += frac_part;
  return {std::move(text), digits};
}

Integer factorial(unsigned long n) {
  Integer out = 1;
  for (unsigned long i = 2; i <= n; ++i) out *= i;
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) throw InvalidArgument("binomial: k > n");
  k = std::min(k, n - k);
  Integer out = 1;
  // Running product; each prefix is itself a binomial coefficient so the division is exact.
  for (unsigned long i = 1; i <= k; ++i) {
    out *= n - k + i;
    mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), i);
  }
  return out;
}

Rational harmonic(unsigned long n) {
  if (n == 0) throw InvalidArgument("harmonic: n must be >= 1");
  mpq_class sum = 0;
  for (unsigned long i = 1; i <= n; ++i) sum += mpq_class(Integer(1), Integer(i));
  return Rational::from_mpq(sum);
}

}  // namespace hankel
