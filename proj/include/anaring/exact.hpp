// Exact evaluation of expressions at rational points.
//
// Values are tracked in the form a + b*pi with a, b rational for as long as
// the expression allows. Zero-ness of exp/sin/cos/sinh/cosh at such arguments
// is exactly decidable (e.g. sin(a + b*pi) = 0 iff a = 0 and b is an integer),
// which is what certifies zeros sitting at rational points.
#pragma once

#include <optional>
#include <vector>

#include "anaring/config.hpp"
#include "anaring/expr.hpp"
#include "anaring/rational.hpp"

namespace anaring {

struct PiLinear {
    Rational a;  // rational part
    Rational b;  // coefficient of pi
    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
};

// Exact value of f at x when representable as a + b*pi; nullopt otherwise.
std::optional<PiLinear> exact_value(const Expr& f, const Rational& x);

enum class Sign { Negative, Zero, Positive, Unknown };

inline Sign sign_from_int(int s) {
    return s < 0 ? Sign::Negative : s > 0 ? Sign::Positive : Sign::Zero;
}

// Sign of f(x): exact when the a + b*pi form applies (always terminates for
// b != 0 since pi is irrational), otherwise decided by interval evaluation
// through the precision ladder; Unknown only at the cap.
Sign sign_at(const Expr& f, const Rational& x, const Config& cfg);

// Exact Taylor coefficients (f, f'/1!, ..., f^(order)/order!) at a rational
// center, computed by series recurrences over exact rationals. nullopt when
// the expression involves pi or a transcendental node, or when a denominator
// series has zero constant term at the center.
std::optional<std::vector<Rational>> exact_taylor(const Expr& f, const Rational& center,
                                                  int order);

// Shift a_n -> a_(n+1): the Taylor-coefficient form of (f(x)-f(c))/(x-c).
std::vector<Rational> deflate_exact(const std::vector<Rational>& coeffs);

}  // namespace anaring
