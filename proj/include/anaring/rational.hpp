// Exact rational helpers on top of GMP's mpq_class.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace anaring {

using Rational = mpq_class;

inline int sign_of(const Rational& q) { return sgn(q); }

// "p/q" without spaces, or just "p" for integers.
std::string to_string(const Rational& q);

// Exact value of "<int>.<digits>", e.g. "0.25" -> 1/4.
Rational rational_from_decimal(const std::string& int_part, const std::string& frac_part);

// True when q = p / 2^k.
bool is_dyadic(const Rational& q);

// The unique rational of smallest denominator in the closed interval [lo, hi]
// (ties on denominator broken toward smaller |numerator|).
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

}  // namespace anaring
