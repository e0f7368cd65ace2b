#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace problogic {

/// Exact arbitrary-precision rational. Always kept in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in canonical form. Throws std::invalid_argument when den is zero.
Rational ratio(const Integer& num, const Integer& den);

/// Parses `p/q`, `p`, or a finite decimal such as `0.25` or `-1.5`.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical `p/q` rendering; integers render without a denominator.
std::string to_string(const Rational& value);

/// Fixed-point rendering with `digits` fractional digits, rounded half to even.
std::string to_decimal(const Rational& value, int digits = 12);

/// Binomial coefficient C(n, k); zero when k > n.
Integer binomial(unsigned long n, unsigned long k);

/// base^exponent for a rational base and non-negative exponent.
Rational power(const Rational& base, unsigned long exponent);

}  // namespace problogic
