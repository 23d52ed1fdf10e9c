#include "anaring/interval.hpp"

#include <cassert>
#include <cstdio>
#include <stdexcept>
#include <utility>
#include <vector>

namespace anaring {

Dyadic::Dyadic() { mpfr_init2(v_, 53); mpfr_set_zero(v_, 1); }

Dyadic::Dyadic(int prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Dyadic::Dyadic(const Dyadic& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);  // same precision: exact
}

Dyadic::Dyadic(Dyadic&& o) noexcept {
    mpfr_init2(v_, 53);
    mpfr_swap(v_, o.v_);
}

Dyadic& Dyadic::operator=(const Dyadic& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Dyadic& Dyadic::operator=(Dyadic&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

Dyadic::~Dyadic() { mpfr_clear(v_); }

Dyadic Dyadic::from_long(long v) {
    Dyadic d(64);
    mpfr_set_si(d.v_, v, MPFR_RNDN);
    return d;
}

Dyadic Dyadic::from_rational(const Rational& q, int prec, mpfr_rnd_t rnd) {
    Dyadic d(prec);
    mpfr_set_q(d.v_, q.get_mpq_t(), rnd);
    return d;
}

Dyadic Dyadic::pos_inf() {
    Dyadic d(53);
    mpfr_set_inf(d.v_, 1);
    return d;
}

Dyadic Dyadic::neg_inf() {
    Dyadic d(53);
    mpfr_set_inf(d.v_, -1);
    return d;
}

Rational Dyadic::to_rational() const {
    assert(!is_inf() && !is_nan());
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
}

std::string Dyadic::to_decimal(int digits, mpfr_rnd_t rnd) const {
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dR*g", digits);
    char* out = nullptr;
    if (mpfr_asprintf(&out, fmt, rnd, v_) < 0) return "?";
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

Interval::Interval() : lo_(53), hi_(53) {}

Interval::Interval(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    assert(lo_.is_nan() || hi_.is_nan() || lo_ <= hi_);
    if (lo_.is_nan() || hi_.is_nan()) {  // poisoned computation: widen to entire
        lo_ = Dyadic::neg_inf();
        hi_ = Dyadic::pos_inf();
    }
}

Interval Interval::point(const Dyadic& v) { return Interval(v, v); }

Interval Interval::from_long(long v) {
    Dyadic d = Dyadic::from_long(v);
    return Interval(d, d);
}

Interval Interval::from_longs(long lo, long hi) {
    return Interval(Dyadic::from_long(lo), Dyadic::from_long(hi));
}

Interval Interval::of_rational(const Rational& q, int prec) {
    return Interval(Dyadic::from_rational(q, prec, MPFR_RNDD),
                    Dyadic::from_rational(q, prec, MPFR_RNDU));
}

Interval Interval::of_rationals(const Rational& lo, const Rational& hi, int prec) {
    return Interval(Dyadic::from_rational(lo, prec, MPFR_RNDD),
                    Dyadic::from_rational(hi, prec, MPFR_RNDU));
}

Interval Interval::entire() { return Interval(Dyadic::neg_inf(), Dyadic::pos_inf()); }

Interval Interval::unit() { return from_longs(0, 1); }

bool Interval::contains(const Rational& q) const {
    return lo_.cmp_rational(q) <= 0 && hi_.cmp_rational(q) >= 0;
}

int Interval::sign() const {
    if (lo_.sign() > 0) return 1;
    if (hi_.sign() < 0) return -1;
    return 0;
}

Dyadic Interval::width(int prec) const {
    Dyadic w(prec);
    mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
    return w;
}

Dyadic Interval::mid(int prec) const {
    Dyadic m(prec);
    if (is_entire()) return m;  // 0
    mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
    mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
    if (m < lo_) return lo_;
    if (m > hi_) return hi_;
    return m;
}

Dyadic Interval::mag(int prec) const {
    Dyadic a(prec), b(prec);
    mpfr_abs(a.raw(), lo_.raw(), MPFR_RNDU);
    mpfr_abs(b.raw(), hi_.raw(), MPFR_RNDU);
    return a > b ? a : b;
}

Interval Interval::abs_bounds(int prec) const {
    Dyadic hi = mag(prec);
    if (contains_zero()) {
        Dyadic z(prec);
        return Interval(z, hi);
    }
    Dyadic a(prec), b(prec);
    mpfr_abs(a.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_abs(b.raw(), hi_.raw(), MPFR_RNDD);
    return Interval(a < b ? a : b, hi);
}

std::string Interval::str(int digits) const {
    return "[" + lo_.to_decimal(digits, MPFR_RNDD) + ", " + hi_.to_decimal(digits, MPFR_RNDU) + "]";
}

Interval iv_add(const Interval& a, const Interval& b, int prec) {
    Dyadic lo(prec), hi(prec);
    mpfr_add(lo.raw(), a.lo().raw(), b.lo().raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), a.hi().raw(), b.hi().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval iv_sub(const Interval& a, const Interval& b, int prec) {
    Dyadic lo(prec), hi(prec);
    mpfr_sub(lo.raw(), a.lo().raw(), b.hi().raw(), MPFR_RNDD);
    mpfr_sub(hi.raw(), a.hi().raw(), b.lo().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval iv_neg(const Interval& a) {
    Dyadic lo(a.hi().precision()), hi(a.lo().precision());
    mpfr_neg(lo.raw(), a.hi().raw(), MPFR_RNDD);
    mpfr_neg(hi.raw(), a.lo().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

namespace {

// Directed product treating 0 * inf as 0 (valid for enclosure endpoints).
void mul_dir(mpfr_ptr out, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) {
    if (mpfr_zero_p(x) || mpfr_zero_p(y)) {
        mpfr_set_zero(out, 1);
        return;
    }
    mpfr_mul(out, x, y, rnd);
}

}  // namespace

Interval iv_mul(const Interval& a, const Interval& b, int prec) {
    if (a.is_entire() || b.is_entire()) return Interval::entire();
    Dyadic lo(prec), hi(prec), t(prec);
    mpfr_srcptr xs[2] = {a.lo().raw(), a.hi().raw()};
    mpfr_srcptr ys[2] = {b.lo().raw(), b.hi().raw()};
    bool first = true;
    for (auto x : xs)
        for (auto y : ys) {
            mul_dir(t.raw(), x, y, MPFR_RNDD);
            if (first || t < lo) mpfr_set(lo.raw(), t.raw(), MPFR_RNDD);
            mul_dir(t.raw(), x, y, MPFR_RNDU);
            if (first || t > hi) mpfr_set(hi.raw(), t.raw(), MPFR_RNDU);
            first = false;
        }
    return Interval(std::move(lo), std::move(hi));
}

Interval iv_div(const Interval& a, const Interval& b, int prec) {
    if (a.is_entire() || b.is_entire() || b.contains_zero()) return Interval::entire();
    Dyadic lo(prec), hi(prec), t(prec);
    mpfr_srcptr xs[2] = {a.lo().raw(), a.hi().raw()};
    mpfr_srcptr ys[2] = {b.lo().raw(), b.hi().raw()};
    bool first = true;
    for (auto x : xs)
        for (auto y : ys) {
            mpfr_div(t.raw(), x, y, MPFR_RNDD);
            if (first || t < lo) mpfr_set(lo.raw(), t.raw(), MPFR_RNDD);
            mpfr_div(t.raw(), x, y, MPFR_RNDU);
            if (first || t > hi) mpfr_set(hi.raw(), t.raw(), MPFR_RNDU);
            first = false;
        }
    return Interval(std::move(lo), std::move(hi));
}

Interval iv_pow_ui(const Interval& a, unsigned long n, int prec) {
    if (n == 0) return Interval::from_long(1);
    if (n == 1) return a;
    if (a.is_entire()) return Interval::entire();
    Dyadic lo(prec), hi(prec);
    if (n % 2 == 1 || a.lo().sign() >= 0) {
        mpfr_pow_ui(lo.raw(), a.lo().raw(), n, MPFR_RNDD);
        mpfr_pow_ui(hi.raw(), a.hi().raw(), n, MPFR_RNDU);
        return Interval(std::move(lo), std::move(hi));
    }
    if (a.hi().sign() <= 0) {  // even power of a nonpositive interval
        mpfr_pow_ui(lo.raw(), a.hi().raw(), n, MPFR_RNDD);
        mpfr_pow_ui(hi.raw(), a.lo().raw(), n, MPFR_RNDU);
        return Interval(std::move(lo), std::move(hi));
    }
    // even power straddling 0: lower bound is exactly 0
    mpfr_set_zero(lo.raw(), 1);
    Dyadic m = a.mag(prec);
    mpfr_pow_ui(hi.raw(), m.raw(), n, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval iv_exp(const Interval& a, int prec) {
    if (a.is_entire()) return Interval::entire();
    Dyadic lo(prec), hi(prec);
    mpfr_exp(lo.raw(), a.lo().raw(), MPFR_RNDD);
    mpfr_exp(hi.raw(), a.hi().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

namespace {

// Mean-value form for sin/cos: f(X) within f(m) + [-1,1]*(X - m), then
// clamped to [-1, 1]. Tight for narrow X, which is all root isolation needs.
Interval mean_value_trig(const Interval& a, int prec, bool is_sin) {
    if (a.is_entire()) return Interval::from_longs(-1, 1);
    Dyadic m = a.mid(prec);
    Dyadic flo(prec), fhi(prec);
    if (is_sin) {
        mpfr_sin(flo.raw(), m.raw(), MPFR_RNDD);
        mpfr_sin(fhi.raw(), m.raw(), MPFR_RNDU);
    } else {
        mpfr_cos(flo.raw(), m.raw(), MPFR_RNDD);
        mpfr_cos(fhi.raw(), m.raw(), MPFR_RNDU);
    }
    // radius: max(hi - m, m - lo), rounded up
    Dyadic r1(prec), r2(prec);
    mpfr_sub(r1.raw(), a.hi().raw(), m.raw(), MPFR_RNDU);
    mpfr_sub(r2.raw(), m.raw(), a.lo().raw(), MPFR_RNDU);
    const Dyadic& r = r1 > r2 ? r1 : r2;
    Dyadic lo(prec), hi(prec);
    mpfr_sub(lo.raw(), flo.raw(), r.raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), fhi.raw(), r.raw(), MPFR_RNDU);
    Dyadic one = Dyadic::from_long(1), mone = Dyadic::from_long(-1);
    if (lo < mone) lo = mone;
    if (hi > one) hi = one;
    if (lo > hi) lo = hi;  // can only happen by clamping; keep a valid point
    return Interval(std::move(lo), std::move(hi));
}

}  // namespace

Interval iv_sin(const Interval& a, int prec) { return mean_value_trig(a, prec, true); }
Interval iv_cos(const Interval& a, int prec) { return mean_value_trig(a, prec, false); }

Interval iv_sinh(const Interval& a, int prec) {
    if (a.is_entire()) return Interval::entire();
    Dyadic lo(prec), hi(prec);
    mpfr_sinh(lo.raw(), a.lo().raw(), MPFR_RNDD);
    mpfr_sinh(hi.raw(), a.hi().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval iv_cosh(const Interval& a, int prec) {
    if (a.is_entire()) return Interval::entire();
    Dyadic hi(prec), t(prec);
    mpfr_cosh(hi.raw(), a.lo().raw(), MPFR_RNDU);
    mpfr_cosh(t.raw(), a.hi().raw(), MPFR_RNDU);
    if (t > hi) hi = t;
    Dyadic lo(prec);
    if (a.contains_zero()) {
        mpfr_set_si(lo.raw(), 1, MPFR_RNDD);  // cosh(0) = 1
    } else {
        Dyadic amin = a.abs_bounds(prec).lo();
        mpfr_cosh(lo.raw(), amin.raw(), MPFR_RNDD);
    }
    return Interval(std::move(lo), std::move(hi));
}

Interval iv_pi(int prec) {
    Dyadic lo(prec), hi(prec);
    mpfr_const_pi(lo.raw(), MPFR_RNDD);
    mpfr_const_pi(hi.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval iv_hull(const Interval& a, const Interval& b) {
    return Interval(a.lo() < b.lo() ? a.lo() : b.lo(), a.hi() > b.hi() ? a.hi() : b.hi());
}

Interval iv_meet(const Interval& a, const Interval& b) {
    if (a.disjoint(b)) throw std::logic_error("iv_meet on disjoint intervals");
    return Interval(a.lo() > b.lo() ? a.lo() : b.lo(), a.hi() < b.hi() ? a.hi() : b.hi());
}

std::pair<Interval, Interval> iv_bisect(const Interval& a, int prec) {
    Dyadic m = a.mid(prec);
    return {Interval(a.lo(), m), Interval(m, a.hi())};
}

}  // namespace anaring
