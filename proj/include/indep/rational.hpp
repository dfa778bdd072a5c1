#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace indep {

/// Exact rational number, always kept canonical: gcd(num, den) = 1, den > 0.
using Rational = mpq_class;

[[nodiscard]] Rational make_rational(long num, long den = 1);

/// Canonical "p/q" form with an explicit denominator, e.g. "3/4", "-1/2",
/// "0/1", "5/1".
[[nodiscard]] std::string to_fraction_string(const Rational& r);

/// Parses "p/q", a plain integer, or a decimal with optional exponent
/// ("1/3", "-2", "0.25", "2.5e-3"). Decimals convert exactly (0.1 = 1/10).
/// Throws ParseError on anything else.
[[nodiscard]] Rational parse_rational(std::string_view text);

[[nodiscard]] double to_double(const Rational& r);

/// base^exponent by repeated squaring of numerator and denominator.
[[nodiscard]] Rational rational_pow(const Rational& base, unsigned long exponent);

}  // namespace indep
