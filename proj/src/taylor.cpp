#include "anaring/taylor.hpp"

#include <cassert>
#include <utility>

#include "anaring/errors.hpp"

namespace anaring {

namespace {

// Internal signal: a denominator enclosure straddles 0 at the current
// precision. Public entry points escalate the ladder before converting this
// into NotAnalyticError.
struct Straddle {
    Interval where;
};

[[noreturn]] void throw_not_analytic(const Interval& w) {
    throw NotAnalyticError(w.lo().to_decimal(12, MPFR_RNDD), w.hi().to_decimal(12, MPFR_RNDU));
}

// ---------------------------------------------------------------------------
// plain interval evaluation

Interval eval_rec(const Expr& f, const Interval& at, int prec, bool strict) {
    switch (f.kind()) {
        case ExprKind::Const:
            return Interval::of_rational(f.value(), prec);
        case ExprKind::PiConst:
            return iv_pi(prec);
        case ExprKind::Var:
            return at;
        case ExprKind::Neg:
            return iv_neg(eval_rec(f.child(), at, prec, strict));
        case ExprKind::Add:
            return iv_add(eval_rec(f.left(), at, prec, strict),
                          eval_rec(f.right(), at, prec, strict), prec);
        case ExprKind::Sub:
            return iv_sub(eval_rec(f.left(), at, prec, strict),
                          eval_rec(f.right(), at, prec, strict), prec);
        case ExprKind::Mul:
            return iv_mul(eval_rec(f.left(), at, prec, strict),
                          eval_rec(f.right(), at, prec, strict), prec);
        case ExprKind::Div: {
            Interval den = eval_rec(f.right(), at, prec, strict);
            if (den.contains_zero()) {
                if (strict) throw Straddle{at};
                return Interval::entire();
            }
            return iv_div(eval_rec(f.left(), at, prec, strict), den, prec);
        }
        case ExprKind::IntPow:
            return iv_pow_ui(eval_rec(f.child(), at, prec, strict), f.exponent(), prec);
        case ExprKind::Exp:
            return iv_exp(eval_rec(f.child(), at, prec, strict), prec);
        case ExprKind::Sin:
            return iv_sin(eval_rec(f.child(), at, prec, strict), prec);
        case ExprKind::Cos:
            return iv_cos(eval_rec(f.child(), at, prec, strict), prec);
        case ExprKind::Sinh:
            return iv_sinh(eval_rec(f.child(), at, prec, strict), prec);
        case ExprKind::Cosh:
            return iv_cosh(eval_rec(f.child(), at, prec, strict), prec);
    }
    return Interval::entire();
}

// ---------------------------------------------------------------------------
// series arithmetic on interval coefficient vectors

using Series = std::vector<Interval>;

Series series_const(const Interval& v, int order) {
    Series s(order + 1, Interval::from_long(0));
    s[0] = v;
    return s;
}

Series series_neg(const Series& a) {
    Series s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = iv_neg(a[i]);
    return s;
}

Series series_add(const Series& a, const Series& b, int prec) {
    Series s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = iv_add(a[i], b[i], prec);
    return s;
}

Series series_sub(const Series& a, const Series& b, int prec) {
    Series s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = iv_sub(a[i], b[i], prec);
    return s;
}

Series series_mul(const Series& a, const Series& b, int prec) {
    std::size_t n = a.size();
    Series s(n, Interval::from_long(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j)
            s[i + j] = iv_add(s[i + j], iv_mul(a[i], b[j], prec), prec);
    return s;
}

Series series_div(const Series& a, const Series& b, int prec, const Interval& at) {
    if (b[0].contains_zero()) throw Straddle{at};
    std::size_t n = a.size();
    Series s(n);
    for (std::size_t i = 0; i < n; ++i) {
        Interval acc = a[i];
        for (std::size_t k = 0; k < i; ++k)
            acc = iv_sub(acc, iv_mul(s[k], b[i - k], prec), prec);
        s[i] = iv_div(acc, b[0], prec);
    }
    return s;
}

Series series_pow(Series base, unsigned n, int prec) {
    Series acc = series_const(Interval::from_long(1), static_cast<int>(base.size()) - 1);
    while (n > 0) {
        if (n & 1u) acc = series_mul(acc, base, prec);
        n >>= 1u;
        if (n) base = series_mul(base, base, prec);
    }
    return acc;
}

Series series_exp(const Series& a, int prec) {
    std::size_t n = a.size();
    Series e(n);
    e[0] = iv_exp(a[0], prec);
    for (std::size_t i = 1; i < n; ++i) {
        Interval acc = Interval::from_long(0);
        for (std::size_t k = 1; k <= i; ++k) {
            Interval t = iv_mul(a[k], e[i - k], prec);
            t = iv_mul(t, Interval::from_long(static_cast<long>(k)), prec);
            acc = iv_add(acc, t, prec);
        }
        e[i] = iv_div(acc, Interval::from_long(static_cast<long>(i)), prec);
    }
    return e;
}

// sin and cos advance together; hyperbolic variant differs by one sign.
std::pair<Series, Series> series_sincos(const Series& a, int prec, bool hyperbolic) {
    std::size_t n = a.size();
    Series s(n), c(n);
    if (hyperbolic) {
        s[0] = iv_sinh(a[0], prec);
        c[0] = iv_cosh(a[0], prec);
    } else {
        s[0] = iv_sin(a[0], prec);
        c[0] = iv_cos(a[0], prec);
    }
    for (std::size_t i = 1; i < n; ++i) {
        Interval as = Interval::from_long(0), ac = Interval::from_long(0);
        for (std::size_t k = 1; k <= i; ++k) {
            Interval ka = iv_mul(a[k], Interval::from_long(static_cast<long>(k)), prec);
            as = iv_add(as, iv_mul(ka, c[i - k], prec), prec);
            ac = iv_add(ac, iv_mul(ka, s[i - k], prec), prec);
        }
        Interval den = Interval::from_long(static_cast<long>(i));
        s[i] = iv_div(as, den, prec);
        c[i] = hyperbolic ? iv_div(ac, den, prec) : iv_neg(iv_div(ac, den, prec));
    }
    return {std::move(s), std::move(c)};
}

Series series_of(const Expr& f, const Interval& center, int order, int prec) {
    switch (f.kind()) {
        case ExprKind::Const:
            return series_const(Interval::of_rational(f.value(), prec), order);
        case ExprKind::PiConst:
            return series_const(iv_pi(prec), order);
        case ExprKind::Var: {
            Series s = series_const(center, order);
            if (order >= 1) s[1] = Interval::from_long(1);
            return s;
        }
        case ExprKind::Neg:
            return series_neg(series_of(f.child(), center, order, prec));
        case ExprKind::Add:
            return series_add(series_of(f.left(), center, order, prec),
                              series_of(f.right(), center, order, prec), prec);
        case ExprKind::Sub:
            return series_sub(series_of(f.left(), center, order, prec),
                              series_of(f.right(), center, order, prec), prec);
        case ExprKind::Mul:
            return series_mul(series_of(f.left(), center, order, prec),
                              series_of(f.right(), center, order, prec), prec);
        case ExprKind::Div:
            return series_div(series_of(f.left(), center, order, prec),
                              series_of(f.right(), center, order, prec), prec, center);
        case ExprKind::IntPow:
            return series_pow(series_of(f.child(), center, order, prec), f.exponent(), prec);
        case ExprKind::Exp:
            return series_exp(series_of(f.child(), center, order, prec), prec);
        case ExprKind::Sin:
            return series_sincos(series_of(f.child(), center, order, prec), prec, false).first;
        case ExprKind::Cos:
            return series_sincos(series_of(f.child(), center, order, prec), prec, false).second;
        case ExprKind::Sinh:
            return series_sincos(series_of(f.child(), center, order, prec), prec, true).first;
        case ExprKind::Cosh:
            return series_sincos(series_of(f.child(), center, order, prec), prec, true).second;
    }
    return {};
}

Interval center_interval(const Point& c, int prec) {
    return c.is_exact() ? Interval::of_rational(c.value(), prec) : c.interval();
}

}  // namespace

Interval eval_enclosure(const Expr& f, const Interval& at, int prec) {
    return eval_rec(f, at, prec, false);
}

Interval eval(const Expr& f, const Interval& at, int prec) {
    Config cfg;
    cfg.precision_start = prec;
    for (int p : cfg.ladder()) {
        try {
            return eval_rec(f, at, p, true);
        } catch (const Straddle&) {
            continue;
        }
    }
    throw_not_analytic(at);
}

std::vector<Interval> taylor_coeffs(const Expr& f, const Point& center, int order, int prec) {
    Config cfg;
    cfg.precision_start = prec;
    for (int p : cfg.ladder()) {
        try {
            return series_of(f, center_interval(center, p), order, p);
        } catch (const Straddle&) {
            continue;
        }
    }
    throw_not_analytic(center_interval(center, prec));
}

std::vector<Interval> deflate(const std::vector<Interval>& coeffs) {
    assert(coeffs.size() >= 2);
    return std::vector<Interval>(coeffs.begin() + 1, coeffs.end());
}

bool domination_check(const std::vector<Interval>& f_coeffs,
                      const std::vector<Interval>& g_coeffs, int prec) {
    if (g_coeffs.size() + 1 != f_coeffs.size()) return false;
    // slack factor 1 + 2^-prec
    Dyadic slack(prec + 8);
    mpfr_set_ui_2exp(slack.raw(), 1, -prec, MPFR_RNDU);
    mpfr_add_ui(slack.raw(), slack.raw(), 1, MPFR_RNDU);
    for (std::size_t n = 0; n < g_coeffs.size(); ++n) {
        Dyadic lhs = g_coeffs[n].mag(prec);
        Dyadic rhs(prec);
        mpfr_mul_ui(rhs.raw(), f_coeffs[n + 1].mag(prec).raw(),
                    static_cast<unsigned long>(n + 1), MPFR_RNDU);
        mpfr_mul(rhs.raw(), rhs.raw(), slack.raw(), MPFR_RNDU);
        if (lhs > rhs) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Taylor models

namespace {

struct TM {
    Series p;      // coefficients 0..N in t = x - center
    Interval rem;  // interval remainder over the domain
};

struct TmCtx {
    int order;
    int prec;
    Interval dx;  // domain - center
    Interval domain;

    Interval bound_poly(const Series& p) const {
        // Horner over dx
        Interval acc = Interval::from_long(0);
        for (std::size_t i = p.size(); i-- > 0;)
            acc = iv_add(iv_mul(acc, dx, prec), p[i], prec);
        return acc;
    }

    Interval bound(const TM& m) const { return iv_add(bound_poly(m.p), m.rem, prec); }
};

TM tm_const(const Interval& v, const TmCtx& cx) {
    return {series_const(v, cx.order), Interval::from_long(0)};
}

TM tm_neg(const TM& a) { return {series_neg(a.p), iv_neg(a.rem)}; }

TM tm_add(const TM& a, const TM& b, const TmCtx& cx) {
    return {series_add(a.p, b.p, cx.prec), iv_add(a.rem, b.rem, cx.prec)};
}

TM tm_sub(const TM& a, const TM& b, const TmCtx& cx) {
    return {series_sub(a.p, b.p, cx.prec), iv_sub(a.rem, b.rem, cx.prec)};
}

TM tm_mul(const TM& a, const TM& b, const TmCtx& cx) {
    int N = cx.order, prec = cx.prec;
    Series full(2 * N + 1, Interval::from_long(0));
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j)
            full[i + j] = iv_add(full[i + j], iv_mul(a.p[i], b.p[j], prec), prec);
    Series kept(full.begin(), full.begin() + N + 1);
    // overflow terms sum_{k>N} c_k dx^k evaluated over the domain
    Interval over = Interval::from_long(0);
    for (int k = 2 * N; k > N; --k) over = iv_add(iv_mul(over, cx.dx, prec), full[k], prec);
    over = iv_mul(over, iv_pow_ui(cx.dx, static_cast<unsigned>(N + 1), prec), prec);
    Interval ba = cx.bound_poly(a.p);
    Interval bb = cx.bound_poly(b.p);
    Interval rem = iv_add(over, iv_mul(ba, b.rem, prec), prec);
    rem = iv_add(rem, iv_mul(bb, a.rem, prec), prec);
    rem = iv_add(rem, iv_mul(a.rem, b.rem, prec), prec);
    return {std::move(kept), std::move(rem)};
}

TM tm_pow(TM base, unsigned n, const TmCtx& cx) {
    TM acc = tm_const(Interval::from_long(1), cx);
    while (n > 0) {
        if (n & 1u) acc = tm_mul(acc, base, cx);
        n >>= 1u;
        if (n) base = tm_mul(base, base, cx);
    }
    return acc;
}

enum class Elem { Recip, ExpF, SinF, CosF, SinhF, CoshF };

// d_k = phi^(k)(c0)/k! for k = 0..N, and a bound on phi^(N+1)/(N+1)! over U.
void elem_coeffs(Elem e, const Interval& c0, const Interval& U, int N, int prec,
                 Series& d, Interval& tail_coeff, const Interval& domain) {
    d.assign(N + 1, Interval::from_long(0));
    Interval fact = Interval::from_long(1);
    switch (e) {
        case Elem::Recip: {
            if (U.contains_zero() || c0.contains_zero()) throw Straddle{domain};
            // d_k = (-1)^k / c0^(k+1)
            Interval inv = iv_div(Interval::from_long(1), c0, prec);
            Interval cur = inv;
            for (int k = 0; k <= N; ++k) {
                d[k] = (k % 2 == 0) ? cur : iv_neg(cur);
                cur = iv_mul(cur, inv, prec);
            }
            Interval b = iv_div(Interval::from_long(1),
                                iv_pow_ui(U, static_cast<unsigned>(N + 2), prec), prec);
            tail_coeff = (N % 2 == 0) ? iv_neg(b) : b;  // (-1)^(N+1) U^-(N+2)
            return;
        }
        case Elem::ExpF: {
            Interval e0 = iv_exp(c0, prec);
            for (int k = 0; k <= N; ++k) {
                if (k > 0) fact = iv_div(fact, Interval::from_long(k), prec);
                d[k] = iv_mul(e0, fact, prec);
            }
            Interval t = iv_exp(U, prec);
            for (int k = 1; k <= N + 1; ++k) t = iv_div(t, Interval::from_long(k), prec);
            tail_coeff = t;
            return;
        }
        case Elem::SinF:
        case Elem::CosF: {
            Interval s0 = iv_sin(c0, prec), co0 = iv_cos(c0, prec);
            for (int k = 0; k <= N; ++k) {
                if (k > 0) fact = iv_div(fact, Interval::from_long(k), prec);
                int phase = (e == Elem::SinF ? k : k + 1) % 4;
                Interval v = (phase == 0)   ? s0
                             : (phase == 1) ? co0
                             : (phase == 2) ? iv_neg(s0)
                                            : iv_neg(co0);
                d[k] = iv_mul(v, fact, prec);
            }
            Interval one = Interval::from_longs(-1, 1);
            for (int k = 1; k <= N + 1; ++k) one = iv_div(one, Interval::from_long(k), prec);
            tail_coeff = one;
            return;
        }
        case Elem::SinhF:
        case Elem::CoshF: {
            Interval s0 = iv_sinh(c0, prec), co0 = iv_cosh(c0, prec);
            for (int k = 0; k <= N; ++k) {
                if (k > 0) fact = iv_div(fact, Interval::from_long(k), prec);
                bool even = (k % 2 == 0);
                Interval v = (e == Elem::SinhF) == even ? s0 : co0;
                d[k] = iv_mul(v, fact, prec);
            }
            // |sinh^(j)|, |cosh^(j)| <= cosh on |U|
            Dyadic m = iv_cosh(U, prec).mag(prec);
            Interval b(Dyadic(m), m);
            b = iv_hull(iv_neg(b), b);
            for (int k = 1; k <= N + 1; ++k) b = iv_div(b, Interval::from_long(k), prec);
            tail_coeff = b;
            return;
        }
    }
}

TM tm_compose(Elem e, const TM& u, const TmCtx& cx) {
    int N = cx.order, prec = cx.prec;
    Interval c0 = u.p[0];
    TM utilde = u;
    utilde.p[0] = Interval::from_long(0);
    Interval W = cx.bound(utilde);
    Interval U = iv_hull(c0, iv_add(c0, W, prec));
    Series d;
    Interval tail_coeff;
    elem_coeffs(e, c0, U, N, prec, d, tail_coeff, cx.domain);
    // Horner in utilde
    TM acc = tm_const(d[N], cx);
    for (int k = N - 1; k >= 0; --k) acc = tm_add(tm_mul(acc, utilde, cx), tm_const(d[k], cx), cx);
    Interval tail = iv_mul(tail_coeff, iv_pow_ui(W, static_cast<unsigned>(N + 1), prec), prec);
    acc.rem = iv_add(acc.rem, tail, prec);
    return acc;
}

TM tm_of(const Expr& f, const TmCtx& cx, const Interval& center) {
    switch (f.kind()) {
        case ExprKind::Const:
            return tm_const(Interval::of_rational(f.value(), cx.prec), cx);
        case ExprKind::PiConst:
            return tm_const(iv_pi(cx.prec), cx);
        case ExprKind::Var: {
            TM m = tm_const(center, cx);
            if (cx.order >= 1)
                m.p[1] = Interval::from_long(1);
            else
                m.rem = iv_hull(m.rem, cx.dx);  // order 0: absorb t into remainder
            return m;
        }
        case ExprKind::Neg:
            return tm_neg(tm_of(f.child(), cx, center));
        case ExprKind::Add:
            return tm_add(tm_of(f.left(), cx, center), tm_of(f.right(), cx, center), cx);
        case ExprKind::Sub:
            return tm_sub(tm_of(f.left(), cx, center), tm_of(f.right(), cx, center), cx);
        case ExprKind::Mul:
            return tm_mul(tm_of(f.left(), cx, center), tm_of(f.right(), cx, center), cx);
        case ExprKind::Div:
            return tm_mul(tm_of(f.left(), cx, center),
                          tm_compose(Elem::Recip, tm_of(f.right(), cx, center), cx), cx);
        case ExprKind::IntPow:
            return tm_pow(tm_of(f.child(), cx, center), f.exponent(), cx);
        case ExprKind::Exp:
            return tm_compose(Elem::ExpF, tm_of(f.child(), cx, center), cx);
        case ExprKind::Sin:
            return tm_compose(Elem::SinF, tm_of(f.child(), cx, center), cx);
        case ExprKind::Cos:
            return tm_compose(Elem::CosF, tm_of(f.child(), cx, center), cx);
        case ExprKind::Sinh:
            return tm_compose(Elem::SinhF, tm_of(f.child(), cx, center), cx);
        case ExprKind::Cosh:
            return tm_compose(Elem::CoshF, tm_of(f.child(), cx, center), cx);
    }
    return tm_const(Interval::entire(), cx);
}

}  // namespace

Interval TaylorModel::range(int prec) const {
    Interval c = center.is_exact() ? Interval::of_rational(center.value(), prec)
                                   : center.interval();
    Interval dx = iv_sub(domain, c, prec);
    Interval acc = Interval::from_long(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = iv_add(iv_mul(acc, dx, prec), coeffs[i], prec);
    return iv_add(acc, remainder, prec);
}

TaylorModel taylor_model(const Expr& f, const Interval& domain, const Point& center, int order,
                         int prec) {
    Config cfg;
    cfg.precision_start = prec;
    for (int p : cfg.ladder()) {
        Interval c = center_interval(center, p);
        TmCtx cx{order, p, iv_sub(domain, c, p), domain};
        try {
            TM m = tm_of(f, cx, c);
            TaylorModel out;
            out.center = center;
            out.order = order;
            out.coeffs = std::move(m.p);
            out.domain = domain;
            out.remainder = std::move(m.rem);
            return out;
        } catch (const Straddle&) {
            continue;
        }
    }
    throw_not_analytic(domain);
}

}  // namespace anaring
