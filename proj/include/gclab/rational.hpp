#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gclab {

/// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (decimal digits only, q > 0). Non-reduced input
/// such as "2/4" is accepted and canonicalized.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace gclab
