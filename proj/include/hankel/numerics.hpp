#pragma once

#include <cstddef>
#include <string>

#include "hankel/rational.hpp"

namespace hankel {

enum class RoundMode { truncate, round_half_away };

/// Fixed-point rendering: sign, integer part, '.', exactly `digits` fractional digits.
struct DecimalString {
  std::string text;
  std::size_t digits = 0;

  friend bool operator==(const DecimalString&, const DecimalString&) = default;
};

/// Exact long division of r to `digits` fractional places. With
/// round_half_away the next digit decides (ties away from zero); truncate
/// drops it. Throws InvalidArgument when digits == 0.
DecimalString to_decimal(const Rational& r, std::size_t digits,
                         RoundMode mode = RoundMode::round_half_away);

Integer factorial(unsigned long n);

/// Throws InvalidArgument when k > n.
Integer binomial(unsigned long n, unsigned long k);

/// 1 + 1/2 + ... + 1/n. Throws InvalidArgument when n == 0.
Rational harmonic(unsigned long n);

}  // namespace hankel
