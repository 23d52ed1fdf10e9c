// Shared deterministic generators for the property tests.
#pragma once

#include <random>
#include <vector>

#include "anaring/expr.hpp"
#include "anaring/ratpoly.hpp"

namespace testgen {

using anaring::Expr;
using anaring::Rational;
using anaring::RatPoly;

struct Rng {
    std::mt19937 g;
    explicit Rng(unsigned seed) : g(seed) {}

    int upto(int n) { return std::uniform_int_distribution<int>(0, n)(g); }  // [0, n]

    Rational rational(int num_range, int den_max) {
        int num = upto(2 * num_range) - num_range;
        int den = 1 + upto(den_max - 1);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    // a rational in [0, 1]
    Rational unit_rational(int den_max) {
        int den = 1 + upto(den_max - 1);
        int num = upto(den);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
};

// Parse-image expressions: nonnegative rational literals, every operator,
// denominators drawn from a zero-free pool so the result stays analytic.
inline Expr random_expr(Rng& r, int depth, bool allow_div = true) {
    using E = Expr;
    if (depth <= 0) {
        switch (r.upto(4)) {
            case 0: return E::var();
            case 1: return E::pi();
            default: {
                Rational q = r.rational(6, 6);
                if (sgn(q) < 0) q = -q;
                return E::constant(q);
            }
        }
    }
    switch (r.upto(allow_div ? 9 : 8)) {
        case 0: return E::add(random_expr(r, depth - 1, allow_div), random_expr(r, depth - 1, allow_div));
        case 1: return E::sub(random_expr(r, depth - 1, allow_div), random_expr(r, depth - 1, allow_div));
        case 2: return E::mul(random_expr(r, depth - 1, allow_div), random_expr(r, depth - 1, allow_div));
        case 3: return E::neg(random_expr(r, depth - 1, allow_div));
        case 4: return E::ipow(random_expr(r, depth - 1, allow_div), static_cast<unsigned>(r.upto(3)));
        case 5: return E::exp(random_expr(r, depth - 2, allow_div));
        case 6: return E::sin(random_expr(r, depth - 2, allow_div));
        case 7: return E::cos(random_expr(r, depth - 2, allow_div));
        case 8:
            return r.upto(1) ? E::sinh(random_expr(r, depth - 2, allow_div))
                             : E::cosh(random_expr(r, depth - 2, allow_div));
        default: {
            // division by a zero-free denominator
            Expr den;
            switch (r.upto(3)) {
                case 0: den = E::add(E::var(), E::constant(1)); break;
                case 1: den = E::add(E::ipow(E::var(), 2), E::constant(1)); break;
                case 2: den = E::exp(E::var()); break;
                default: den = E::cosh(E::var()); break;
            }
            return E::div(random_expr(r, depth - 1, allow_div), std::move(den));
        }
    }
}

inline RatPoly random_poly(Rng& r, int max_deg) {
    int deg = r.upto(max_deg);
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& q : c) q = r.rational(8, 6);
    if (sgn(c.back()) == 0) c.back() = 1;
    return RatPoly(std::move(c));
}

// product of (x - root_i)^(m_i) for planted unit-interval roots, an optional
// scaling and optional zero-free quadratic noise
inline Rational frac(long n, long d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline RatPoly planted_poly(Rng& r, const std::vector<std::pair<Rational, int>>& roots,
                            bool noise = false) {
    RatPoly p = RatPoly::constant(frac(1 + r.upto(4), 1 + r.upto(3)));
    for (const auto& [q, m] : roots)
        for (int i = 0; i < m; ++i) p = p * RatPoly::linear_root(q);
    if (noise) {
        // x^2 + bx + c with b^2 < 4c: no real roots
        Rational b = r.rational(2, 3);
        Rational c = b * b / 4 + frac(1 + r.upto(3), 1 + r.upto(2));
        p = p * RatPoly({c, b, Rational(1)});
    }
    return p;
}

inline Expr poly_to_expr(const RatPoly& p) {
    using E = Expr;
    if (p.is_zero()) return E::constant(0);
    Expr acc = E::constant(p[static_cast<std::size_t>(p.degree())]);
    for (int i = p.degree() - 1; i >= 0; --i)
        acc = E::add(E::mul(std::move(acc), E::var()), E::constant(p[static_cast<std::size_t>(i)]));
    return acc;
}

}  // namespace testgen
