// Rigorous Taylor coefficients, interval evaluation, Taylor models with
// remainder bounds, and coefficient-shift deflation.
#pragma once

#include <vector>

#include "anaring/config.hpp"
#include "anaring/divisor.hpp"
#include "anaring/expr.hpp"
#include "anaring/interval.hpp"

namespace anaring {

// Enclosure of { f(x) : x in at }. Requires denominators nonvanishing on
// [0,1] (check_analytic); throws NotAnalyticError when a denominator
// enclosure still contains 0 after escalating to the precision cap.
Interval eval(const Expr& f, const Interval& at, int prec);

// Non-throwing variant used by subdivision: returns entire() when a
// denominator enclosure straddles 0 at this precision.
Interval eval_enclosure(const Expr& f, const Interval& at, int prec);

// Element n encloses f^(n)(center)/n!. Throws NotAnalyticError when a
// denominator's constant term cannot be excluded from 0 at the cap.
std::vector<Interval> taylor_coeffs(const Expr& f, const Point& center, int order, int prec);

// The coefficient shift a_n -> a_(n+1): Taylor form of (f(x)-f(c))/(x-c).
// Input length >= 2; output is one shorter.
std::vector<Interval> deflate(const std::vector<Interval>& coeffs);

// Sanity identity |g^(n)(c)| = |f^(n+1)(c)|/(n+1) <= |f^(n+1)(c)|, checked as
// upper(|g_n|) <= (n+1) * upper(|f_(n+1)|) * (1 + 2^-prec slack).
bool domination_check(const std::vector<Interval>& f_coeffs,
                      const std::vector<Interval>& g_coeffs, int prec);

// Order-N local model: f(x) lies in sum coeffs[n]*(x-center)^n + remainder
// for every x in domain.
struct TaylorModel {
    Point center;
    int order = 0;
    std::vector<Interval> coeffs;
    Interval domain;
    Interval remainder;

    // Enclosure of f over the domain implied by the model.
    Interval range(int prec) const;
};

TaylorModel taylor_model(const Expr& f, const Interval& domain, const Point& center, int order,
                         int prec);

}  // namespace anaring
