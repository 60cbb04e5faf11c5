#pragma once

#include <gmpxx.h>

#include <string>

namespace mms {

/// Exact rational value. GMP keeps every result in lowest terms with a
/// positive denominator, which is what all alpha-threshold comparisons
/// in the allocation path rely on. No floating point anywhere.
using Rational = mpq_class;

/// Build p/q from machine integers (q defaults to 1). Throws on q == 0.
Rational rat(long num, long den = 1);

/// Parse "p/q" or a plain integer string. Throws InputError on malformed
/// input, a zero denominator, or a negative denominator.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& q);

}  // namespace mms
