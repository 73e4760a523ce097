#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gvp {

/// Exact rational with arbitrary-precision numerator and denominator.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a plain decimal such as "2.75".
/// Throws Error(parse) on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text; integers print without a denominator.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// Throws Error(invalid_argument) if the value is not an integer that fits.
std::int64_t to_int64(const Rational& value);

Rational floor_rational(const Rational& value);

/// num/den in lowest terms; den must be nonzero.
Rational ratio(long num, long den);

}  // namespace gvp
