#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace majorlab {

/// Exact rational scalar. GMP keeps values canonical: lowest terms, positive
/// denominator. All order comparisons and arithmetic are exact.
using Rational = mpq_class;

/// Parses "num/den", an integer literal, or a decimal literal ("0.25", "2.5e-3").
/// Decimal text is converted literally in base 10 (never through floating point),
/// so "0.1" becomes exactly 1/10. Throws ParseError on malformed input.
Rational parse_rational(const std::string& text);

/// Canonical text form: "num/den", or just "num" when the denominator is one.
std::string to_string(const Rational& value);

/// Nearest-double conversion (exact mantissa extraction; no overflow for any
/// magnitude GMP can hold, values beyond double range saturate to +/-inf).
double to_double(const Rational& value);

/// Base-2 logarithm of a positive rational, computed as log2(num) - log2(den)
/// with exact 2^k scaling so enormous numerators/denominators stay accurate.
/// Throws DomainViolation if value <= 0.
double log2_rational(const Rational& value);

/// Least common multiple of the denominators of `values` (all canonical).
mpz_class lcm_of_denominators(const std::vector<Rational>& values);

}  // namespace majorlab
