#pragma once

// Exact scalars. Everything in jumpcalc is computed over Q with GMP-backed
// arbitrary precision; there is no floating point anywhere in the library.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jumpcalc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (decimal integers, q != 0) into lowest terms.
/// Throws std::invalid_argument on anything else, including decimals.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// Narrowing conversion; throws std::overflow_error when out of range.
long to_long(const Integer& z);

Rational factorial(unsigned k);

}  // namespace jumpcalc
