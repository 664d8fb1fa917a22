#pragma once

// Exact arithmetic used by the polyhedral code. GMP's C++ classes keep the
// values canonical (reduced fraction, positive denominator) after every
// arithmetic operation.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace bintab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a/b", an integer, or a plain decimal such as "-0.125" or "1e-3"
/// into an exact rational. Throws ParseError on malformed text.
Rational parse_rational(std::string_view text);

/// Exact rational equal to the shortest decimal that round-trips to `value`.
/// 0.1 becomes 1/10, not the binary expansion of the double.
Rational rational_from_double(double value);

/// `value` rounded half away from zero to `digits` decimal places, as an
/// exact rational with denominator 10^digits.
Rational round_to_digits(long double value, int digits);

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& value);

/// Fixed-point rendering with `digits` decimals (exact rounding).
std::string to_decimal(const Rational& value, int digits);

inline double to_double(const Rational& value) { return value.get_d(); }
inline double to_double(double value) { return value; }

/// Exact square root when both numerator and denominator are perfect squares.
bool exact_sqrt(const Rational& value, Rational& root);

Integer gcd_of(const std::vector<Integer>& values);
Integer lcm_of_denominators(const std::vector<Rational>& values);

}  // namespace bintab
