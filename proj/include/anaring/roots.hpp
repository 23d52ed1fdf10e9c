// Certified isolation of all zeros of an expression in [0,1] with
// multiplicities, zero-function detection, and analyticity validation.
//
// Zeros are certified three ways:
//   - interval-Newton contraction (unique simple zero in a box),
//   - monotone sign change on a gap between derivative zeros,
//   - exact rational points: the derivative chain is evaluated exactly
//     (a + b*pi arithmetic) at q, and f^(m) is bounded away from 0 on a
//     neighborhood, which pins both the multiplicity and uniqueness.
// Rational zeros hiding inside enclosures are recovered by simplest-rational
// reconstruction and verified exactly before being reported as exact points.
#pragma once

#include <optional>

#include "anaring/config.hpp"
#include "anaring/divisor.hpp"
#include "anaring/expr.hpp"
#include "anaring/interval.hpp"

namespace anaring {

enum class IsolateKind { Divisor, ZeroFunction, Undecidable };

struct IsolateResult {
    IsolateKind kind = IsolateKind::Undecidable;
    Divisor divisor;      // IsolateKind::Divisor
    Interval unresolved;  // IsolateKind::Undecidable: a box that resisted analysis

    bool is_divisor() const { return kind == IsolateKind::Divisor; }
};

// Ok iff every denominator subexpression has an empty divisor on [0,1]
// (checked innermost first). Throws NotAnalyticError otherwise.
void check_analytic(const Expr& f, const Config& cfg);

// Non-throwing form; fills *witness on failure when given.
bool is_analytic(const Expr& f, const Config& cfg, Interval* witness = nullptr);

// The complete divisor of f on [0,1]. ZeroFunction only when normalize(f) is
// the literal zero constant; Undecidable instead of any partial answer.
IsolateResult isolate_zeros(const Expr& f, const Config& cfg);

struct MultiplicityResult {
    bool decided = false;
    int m = 0;
    Interval enclosure;  // refined candidate on which f^(m) is sign-definite
    int fm_sign = 0;     // that sign
};

// Least m >= 1 with f^(m) bounded away from 0 over the (refined) candidate
// while f..f^(m-1) have certified zeros inside; undecided result otherwise.
// Precondition: candidate isolates exactly one zero point of f.
MultiplicityResult multiplicity(const Expr& f, const Interval& candidate, const Config& cfg);

// Shrink an enclosure to width <= target (same zero, same certificate).
// Exact points come back unchanged. Throws PrecisionExhausted when target is
// below the precision cap's resolution.
Point refine(const Point& p, const Expr& f, const Rational& target, const Config& cfg);

// Order of vanishing of f at the exact rational q, decided by exact
// evaluation of the derivative chain: the least j <= bound with f^(j)(q)
// certifiably nonzero (0 when f(q) != 0). nullopt when some level cannot be
// decided or every level through bound vanishes.
std::optional<int> exact_multiplicity_at(const Expr& f, const Rational& q, int bound,
                                         const Config& cfg);

}  // namespace anaring
