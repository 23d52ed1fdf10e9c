// Dyadic numbers (arbitrary-precision binary floats via MPFR) and closed
// intervals over them with outward rounding. Every arithmetic routine takes
// the working precision explicitly; nothing reads ambient state.
#pragma once

#include <mpfr.h>

#include <string>

#include "anaring/rational.hpp"

namespace anaring {

// RAII wrapper around one mpfr_t. Copy preserves value and precision.
class Dyadic {
  public:
    Dyadic();                 // 0 at 53 bits
    explicit Dyadic(int prec);
    Dyadic(const Dyadic& o);
    Dyadic(Dyadic&& o) noexcept;
    Dyadic& operator=(const Dyadic& o);
    Dyadic& operator=(Dyadic&& o) noexcept;
    ~Dyadic();

    static Dyadic from_long(long v);
    static Dyadic from_rational(const Rational& q, int prec, mpfr_rnd_t rnd);
    static Dyadic pos_inf();
    static Dyadic neg_inf();

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }

    int sign() const { return mpfr_sgn(v_); }  // 0 for zero
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    // Exact conversion; dyadics are rationals. Undefined for inf/nan.
    Rational to_rational() const;

    // Decimal string rounded in direction rnd with the given significant digits.
    std::string to_decimal(int digits, mpfr_rnd_t rnd) const;
    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }

    // Exact, precision-independent comparisons.
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Dyadic& a, const Dyadic& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    int cmp_rational(const Rational& q) const { return mpfr_cmp_q(v_, q.get_mpq_t()); }

  private:
    mpfr_t v_;
};

// Closed interval [lo, hi], lo <= hi. Endpoints may be infinite (the "entire"
// interval stands in for an evaluation that could not be bounded).
class Interval {
  public:
    Interval();  // [0, 0]
    Interval(Dyadic lo, Dyadic hi);

    static Interval point(const Dyadic& v);
    static Interval from_long(long v);
    static Interval from_longs(long lo, long hi);
    // Outward-rounded enclosure of q (exact when q is dyadic at prec).
    static Interval of_rational(const Rational& q, int prec);
    static Interval of_rationals(const Rational& lo, const Rational& hi, int prec);
    static Interval entire();
    static Interval unit();  // [0, 1]

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }

    bool is_point() const { return lo_ == hi_; }
    bool is_entire() const { return lo_.is_inf() || hi_.is_inf(); }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool contains(const Rational& q) const;
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool strictly_contains(const Interval& o) const { return lo_ < o.lo_ && o.hi_ < hi_; }
    bool disjoint(const Interval& o) const { return hi_ < o.lo_ || o.hi_ < lo_; }
    bool overlaps(const Interval& o) const { return !disjoint(o); }

    // +1 when lo > 0, -1 when hi < 0, 0 when the interval straddles or touches 0.
    int sign() const;

    Dyadic width(int prec) const;               // rounded up
    Dyadic mid(int prec) const;                 // rounded to nearest, clamped inside
    Dyadic mag(int prec) const;                 // max |x|, rounded up
    Interval abs_bounds(int prec) const;        // enclosure of |x|

    std::string str(int digits = 10) const;     // "[lo, hi]" outward decimals

  private:
    Dyadic lo_, hi_;
};

// Arithmetic (outward rounding at prec).
Interval iv_add(const Interval& a, const Interval& b, int prec);
Interval iv_sub(const Interval& a, const Interval& b, int prec);
Interval iv_neg(const Interval& a);
Interval iv_mul(const Interval& a, const Interval& b, int prec);
Interval iv_div(const Interval& a, const Interval& b, int prec);  // entire() when 0 in b
Interval iv_pow_ui(const Interval& a, unsigned long n, int prec);
Interval iv_exp(const Interval& a, int prec);
Interval iv_sin(const Interval& a, int prec);
Interval iv_cos(const Interval& a, int prec);
Interval iv_sinh(const Interval& a, int prec);
Interval iv_cosh(const Interval& a, int prec);
Interval iv_pi(int prec);

Interval iv_hull(const Interval& a, const Interval& b);
// Intersection; requires overlap.
Interval iv_meet(const Interval& a, const Interval& b);

// Splits [lo, hi] at the dyadic midpoint.
std::pair<Interval, Interval> iv_bisect(const Interval& a, int prec);

}  // namespace anaring
