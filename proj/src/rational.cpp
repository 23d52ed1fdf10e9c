#include "anaring/rational.hpp"

#include <cassert>

namespace anaring {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_decimal(const std::string& int_part, const std::string& frac_part) {
    mpz_class num(int_part.empty() ? "0" : int_part);
    mpz_class den(1);
    for (char c : frac_part) {
        (void)c;
        num *= 10;
        den *= 10;
    }
    mpz_class frac(frac_part.empty() ? "0" : frac_part);
    num += frac;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_dyadic(const Rational& q) {
    mpz_class d = q.get_den();
    // den is positive and canonical; dyadic iff den is a power of two
    return mpz_scan1(d.get_mpz_t(), 0) == mpz_sizeinbase(d.get_mpz_t(), 2) - 1;
}

namespace {

// 0 < lo <= hi. Classic continued-fraction walk.
Rational simplest_pos(const Rational& lo, const Rational& hi) {
    mpz_class fl = lo.get_num() / lo.get_den();  // floor for positive values
    Rational ceil_lo = (lo.get_den() == 1) ? lo : Rational(fl + 1);
    if (ceil_lo <= hi) return ceil_lo;
    Rational lo_f = lo - Rational(fl), hi_f = hi - Rational(fl);  // both in (0,1)
    Rational inner = simplest_pos(1 / hi_f, 1 / lo_f);
    return Rational(fl) + 1 / inner;
}

}  // namespace

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    assert(lo <= hi);
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
    if (sgn(lo) > 0) return simplest_pos(lo, hi);
    return -simplest_pos(-hi, -lo);
}

}  // namespace anaring
