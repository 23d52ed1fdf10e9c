#include "anaring/exact.hpp"

#include <cassert>

#include "anaring/interval.hpp"
#include "anaring/taylor.hpp"

namespace anaring {

namespace {

using V = std::optional<PiLinear>;

bool is_integer(const Rational& q) { return q.get_den() == 1; }

V mul(const V& x, const V& y) {
    if (!x || !y) return std::nullopt;
    if (sgn(x->b) != 0 && sgn(y->b) != 0) return std::nullopt;  // pi^2 term
    return PiLinear{x->a * y->a, x->a * y->b + x->b * y->a};
}

V eval_pi_linear(const Expr& f, const Rational& x) {
    using K = ExprKind;
    switch (f.kind()) {
        case K::Const:
            return PiLinear{f.value(), Rational(0)};
        case K::PiConst:
            return PiLinear{Rational(0), Rational(1)};
        case K::Var:
            return PiLinear{x, Rational(0)};
        case K::Neg: {
            V u = eval_pi_linear(f.child(), x);
            if (!u) return std::nullopt;
            return PiLinear{-u->a, -u->b};
        }
        case K::Add: {
            V u = eval_pi_linear(f.left(), x), v = eval_pi_linear(f.right(), x);
            if (!u || !v) return std::nullopt;
            return PiLinear{u->a + v->a, u->b + v->b};
        }
        case K::Sub: {
            V u = eval_pi_linear(f.left(), x), v = eval_pi_linear(f.right(), x);
            if (!u || !v) return std::nullopt;
            return PiLinear{u->a - v->a, u->b - v->b};
        }
        case K::Mul: {
            // a factor that is exactly zero kills the product even when the
            // other factor leaves the a + b*pi class (it is still finite)
            V u = eval_pi_linear(f.left(), x);
            if (u && u->is_zero()) return PiLinear{Rational(0), Rational(0)};
            V v = eval_pi_linear(f.right(), x);
            if (v && v->is_zero()) return PiLinear{Rational(0), Rational(0)};
            return mul(u, v);
        }
        case K::Div: {
            V u = eval_pi_linear(f.left(), x), v = eval_pi_linear(f.right(), x);
            if (v && v->is_zero()) return std::nullopt;  // pole; analyticity guard applies
            // zero numerator over an analytic (hence nonvanishing) denominator
            if (u && u->is_zero()) return PiLinear{Rational(0), Rational(0)};
            if (!u || !v) return std::nullopt;
            if (sgn(v->b) != 0) return std::nullopt;
            return PiLinear{u->a / v->a, u->b / v->a};
        }
        case K::IntPow: {
            if (f.exponent() == 0) return PiLinear{Rational(1), Rational(0)};
            V u = eval_pi_linear(f.child(), x);
            if (u && u->is_zero()) return PiLinear{Rational(0), Rational(0)};
            if (!u) return std::nullopt;
            V acc = u;
            for (unsigned i = 1; i < f.exponent() && acc; ++i) acc = mul(acc, u);
            return acc;
        }
        case K::Exp: {
            V u = eval_pi_linear(f.child(), x);
            if (u && u->is_zero()) return PiLinear{Rational(1), Rational(0)};
            return std::nullopt;
        }
        case K::Sin: {
            V u = eval_pi_linear(f.child(), x);
            if (!u) return std::nullopt;
            if (sgn(u->a) != 0) return std::nullopt;
            if (is_integer(u->b)) return PiLinear{Rational(0), Rational(0)};  // sin(k*pi) = 0
            Rational h = u->b - Rational(1, 2);
            if (is_integer(h)) {  // sin(pi*(k+1/2)) = (-1)^k
                bool even = mpz_even_p(h.get_num().get_mpz_t()) != 0;
                return PiLinear{Rational(even ? 1 : -1), Rational(0)};
            }
            return std::nullopt;
        }
        case K::Cos: {
            V u = eval_pi_linear(f.child(), x);
            if (!u) return std::nullopt;
            if (sgn(u->a) != 0) return std::nullopt;
            if (is_integer(u->b)) {  // cos(k*pi) = (-1)^k
                bool even = mpz_even_p(u->b.get_num().get_mpz_t()) != 0;
                return PiLinear{Rational(even ? 1 : -1), Rational(0)};
            }
            if (is_integer(u->b - Rational(1, 2)))
                return PiLinear{Rational(0), Rational(0)};  // cos(pi*(k+1/2)) = 0
            return std::nullopt;
        }
        case K::Sinh: {
            V u = eval_pi_linear(f.child(), x);
            if (u && u->is_zero()) return PiLinear{Rational(0), Rational(0)};
            return std::nullopt;
        }
        case K::Cosh: {
            V u = eval_pi_linear(f.child(), x);
            if (u && u->is_zero()) return PiLinear{Rational(1), Rational(0)};
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<PiLinear> exact_value(const Expr& f, const Rational& x) {
    return eval_pi_linear(f, x);
}

Sign sign_at(const Expr& f, const Rational& x, const Config& cfg) {
    if (auto v = exact_value(f, x)) {
        if (sgn(v->b) == 0) return sign_from_int(sgn(v->a));
        // a + b*pi with rational a, b and b != 0 is irrational, hence nonzero;
        // the numeric ladder settles the sign.
        for (int p : cfg.ladder()) {
            Interval val = iv_add(Interval::of_rational(v->a, p),
                                  iv_mul(Interval::of_rational(v->b, p), iv_pi(p), p), p);
            if (val.sign() != 0) return sign_from_int(val.sign());
        }
        return Sign::Unknown;
    }
    for (int p : cfg.ladder()) {
        Interval val = eval_enclosure(f, Interval::of_rational(x, p), p);
        if (val.sign() != 0) return sign_from_int(val.sign());
        if (val.is_point() && val.lo().is_zero()) return Sign::Zero;
    }
    return Sign::Unknown;
}

// ---------------------------------------------------------------------------
// exact rational Taylor coefficients

namespace {

using QSeries = std::optional<std::vector<Rational>>;

QSeries q_of(const Expr& f, const Rational& c, int order) {
    using K = ExprKind;
    const std::size_t n = static_cast<std::size_t>(order) + 1;
    switch (f.kind()) {
        case K::Const: {
            std::vector<Rational> s(n, Rational(0));
            s[0] = f.value();
            return s;
        }
        case K::Var: {
            std::vector<Rational> s(n, Rational(0));
            s[0] = c;
            if (n > 1) s[1] = 1;
            return s;
        }
        case K::Neg: {
            QSeries u = q_of(f.child(), c, order);
            if (!u) return std::nullopt;
            for (auto& q : *u) q = -q;
            return u;
        }
        case K::Add:
        case K::Sub: {
            QSeries u = q_of(f.left(), c, order), v = q_of(f.right(), c, order);
            if (!u || !v) return std::nullopt;
            for (std::size_t i = 0; i < n; ++i) {
                if (f.kind() == K::Add)
                    (*u)[i] += (*v)[i];
                else
                    (*u)[i] -= (*v)[i];
            }
            return u;
        }
        case K::Mul: {
            QSeries u = q_of(f.left(), c, order), v = q_of(f.right(), c, order);
            if (!u || !v) return std::nullopt;
            std::vector<Rational> s(n, Rational(0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; i + j < n; ++j) s[i + j] += (*u)[i] * (*v)[j];
            return s;
        }
        case K::Div: {
            QSeries u = q_of(f.left(), c, order), v = q_of(f.right(), c, order);
            if (!u || !v) return std::nullopt;
            if (sgn((*v)[0]) == 0) return std::nullopt;
            std::vector<Rational> s(n, Rational(0));
            for (std::size_t i = 0; i < n; ++i) {
                Rational acc = (*u)[i];
                for (std::size_t k = 0; k < i; ++k) acc -= s[k] * (*v)[i - k];
                s[i] = acc / (*v)[0];
            }
            return s;
        }
        case K::IntPow: {
            QSeries u = q_of(f.child(), c, order);
            if (!u) return std::nullopt;
            std::vector<Rational> acc(n, Rational(0));
            acc[0] = 1;
            std::vector<Rational> base = *u;
            unsigned e = f.exponent();
            auto mul_q = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
                std::vector<Rational> s(n, Rational(0));
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; i + j < n; ++j) s[i + j] += a[i] * b[j];
                return s;
            };
            while (e > 0) {
                if (e & 1u) acc = mul_q(acc, base);
                e >>= 1u;
                if (e) base = mul_q(base, base);
            }
            return acc;
        }
        default:
            return std::nullopt;  // pi or a transcendental node
    }
}

}  // namespace

std::optional<std::vector<Rational>> exact_taylor(const Expr& f, const Rational& center,
                                                  int order) {
    return q_of(f, center, order);
}

std::vector<Rational> deflate_exact(const std::vector<Rational>& coeffs) {
    assert(coeffs.size() >= 2);
    return std::vector<Rational>(coeffs.begin() + 1, coeffs.end());
}

}  // namespace anaring
