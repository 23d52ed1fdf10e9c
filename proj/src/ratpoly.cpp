#include "anaring/ratpoly.hpp"

#include <algorithm>
#include <cassert>

#include "anaring/errors.hpp"

namespace anaring {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

RatPoly RatPoly::constant(Rational q) {
    if (sgn(q) == 0) return RatPoly();
    return RatPoly({std::move(q)});
}

RatPoly RatPoly::x() { return RatPoly({Rational(0), Rational(1)}); }

RatPoly RatPoly::linear_root(const Rational& r) { return RatPoly({-r, Rational(1)}); }

Rational RatPoly::eval(const Rational& at) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
    assert(!is_zero());
    return scaled(1 / leading());
}

RatPoly RatPoly::scaled(const Rational& s) const {
    std::vector<Rational> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * s;
    return RatPoly(std::move(d));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
    return RatPoly(std::move(d));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] -= b.c_[i];
    return RatPoly(std::move(d));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rational> d(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(d));
}

RatPoly RatPoly::operator-() const { return scaled(Rational(-1)); }

std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw DivisionByZeroPoly();
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {RatPoly(), a};
    std::vector<Rational> quot(a.degree() - db + 1, Rational(0));
    for (int i = a.degree(); i >= db; --i) {
        if (sgn(rem[i]) == 0) continue;
        Rational q = rem[i] / b.leading();
        quot[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b[j];
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() && b.is_zero()) throw BothZero();
    RatPoly u = a, v = b;
    while (!v.is_zero()) {
        RatPoly r = poly_divmod(u, v).second;
        u = std::move(v);
        v = std::move(r);
    }
    return u.monic();
}

namespace {

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
    std::vector<RatPoly> seq;
    seq.push_back(p);
    RatPoly d = p.derivative();
    if (!d.is_zero()) {
        seq.push_back(d);
        while (true) {
            RatPoly r = poly_divmod(seq[seq.size() - 2], seq.back()).second;
            if (r.is_zero()) break;
            seq.push_back(-r);
        }
    }
    return seq;
}

int sign_variations(const std::vector<RatPoly>& seq, const Rational& at) {
    int var = 0, prev = 0;
    for (const auto& q : seq) {
        int s = sgn(q.eval(at));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace

int sturm_count(const RatPoly& p, const Rational& lo, const Rational& hi) {
    assert(!p.is_zero());
    if (hi <= lo) return 0;
    // Sturm needs a square-free p for exactness at multiple roots; divide out
    // the gcd with the derivative (roots and the (lo,hi] convention survive).
    RatPoly q = p;
    if (p.degree() >= 1) {
        RatPoly g = poly_gcd(p, p.derivative());
        if (g.degree() >= 1) q = poly_divmod(p, g).first;
    }
    if (q.degree() < 1) return 0;
    auto seq = sturm_sequence(q);
    return sign_variations(seq, lo) - sign_variations(seq, hi);
}

std::vector<std::pair<RatPoly, int>> squarefree_decompose(const RatPoly& p) {
    assert(!p.is_zero());
    std::vector<std::pair<RatPoly, int>> out;
    if (p.degree() < 1) return out;
    // Yun's algorithm
    RatPoly d = p.derivative();
    RatPoly a = poly_gcd(p, d);
    RatPoly b = poly_divmod(p, a).first;
    RatPoly c = poly_divmod(d, a).first;
    RatPoly z = c - b.derivative();
    int i = 1;
    while (b.degree() >= 1) {
        RatPoly g = poly_gcd(b, z);
        if (g.degree() >= 1) out.emplace_back(g.monic(), i);
        b = poly_divmod(b, g).first;
        z = poly_divmod(z, g).first - b.derivative();
        ++i;
    }
    return out;
}

namespace {

// Rational roots of a square-free polynomial inside [0,1], found by isolating
// with Sturm bisection and testing the simplest rational in each interval.
// Remaining roots are certified irrational only in the sense that the simplest
// candidate failed; they stay as isolating intervals and are shrunk on demand.
struct Isolator {
    const RatPoly& p;
    std::vector<RatPoly> seq;

    explicit Isolator(const RatPoly& sf) : p(sf), seq(sturm_sequence(sf)) {}

    int count(const Rational& lo, const Rational& hi) const {
        return sign_variations(seq, lo) - sign_variations(seq, hi);
    }

    // Distinct roots in (lo, hi], each isolated to an interval containing
    // exactly one root.
    void isolate(const Rational& lo, const Rational& hi,
                 std::vector<std::pair<Rational, Rational>>& out) const {
        int n = count(lo, hi);
        if (n == 0) return;
        if (n == 1) {
            out.emplace_back(lo, hi);
            return;
        }
        Rational mid = (lo + hi) / 2;
        // nudge off a root so the half-open convention stays clean
        while (sgn(p.eval(mid)) == 0) mid = (lo + mid) / 2;
        isolate(lo, mid, out);
        isolate(mid, hi, out);
    }
};

}  // namespace

std::vector<OracleRoot> exact_unit_interval_divisor(const RatPoly& p) {
    assert(!p.is_zero());
    std::vector<OracleRoot> out;
    std::vector<RatPoly> owner;  // square-free factor owning each entry
    if (p.degree() < 1) return out;
    for (const auto& [factor, mult] : squarefree_decompose(p)) {
        if (factor.degree() < 1) continue;
        Isolator iso(factor);
        // endpoint 0 is outside the (lo, hi] convention; test it directly
        if (sgn(factor.eval(Rational(0))) == 0) {
            OracleRoot r;
            r.exact = true;
            r.value = 0;
            r.multiplicity = mult;
            out.push_back(std::move(r));
            owner.push_back(factor);
        }
        std::vector<std::pair<Rational, Rational>> boxes;
        iso.isolate(Rational(0), Rational(1), boxes);
        for (auto& [lo, hi] : boxes) {
            // shrink until the simplest rational in the box is the root or the
            // box is tight enough to call the root irrational-for-our-purposes
            Rational a = lo, b = hi;
            OracleRoot r;
            r.multiplicity = mult;
            bool exact = false;
            for (int iter = 0; iter < 200; ++iter) {
                if (sgn(factor.eval(b)) == 0) {  // right endpoint is the root
                    r.exact = true;
                    r.value = b;
                    exact = true;
                    break;
                }
                Rational cand = simplest_rational_in(a, b);
                if (cand > a && sgn(factor.eval(cand)) == 0) {
                    r.exact = true;
                    r.value = cand;
                    exact = true;
                    break;
                }
                Rational mid = (a + b) / 2;
                if (sgn(factor.eval(mid)) == 0) {
                    r.exact = true;
                    r.value = mid;
                    exact = true;
                    break;
                }
                if (iso.count(a, mid) == 1)
                    b = mid;
                else
                    a = mid;
                // a rational root of a degree-d integer polynomial has bounded
                // denominator; 200 bisections are far past any such bound for
                // our corpus, so reaching the cap means irrational
            }
            if (!exact) {
                r.exact = false;
                r.lo = a;
                r.hi = b;
            }
            out.push_back(std::move(r));
            owner.push_back(factor);
        }
    }
    // one bisection step; sign change is guaranteed for a square-free factor
    // with exactly one root strictly inside (lo, hi)
    auto halve = [](OracleRoot& r, const RatPoly& g) {
        Rational mid = (r.lo + r.hi) / 2;
        if (sgn(g.eval(mid)) == 0) {
            r.exact = true;
            r.value = mid;
            return;
        }
        if (sgn(g.eval(r.lo)) * sgn(g.eval(mid)) < 0)
            r.hi = mid;
        else
            r.lo = mid;
    };
    // shrink until entries are pairwise disjoint (roots are distinct reals,
    // so repeated halving always separates them)
    std::vector<std::size_t> order(out.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        const Rational li = out[i].exact ? out[i].value : out[i].lo;
        const Rational lj = out[j].exact ? out[j].value : out[j].lo;
        return li < lj;
    });
    bool again = true;
    while (again) {
        again = false;
        for (std::size_t k = 0; k + 1 < order.size(); ++k) {
            OracleRoot& a = out[order[k]];
            OracleRoot& b = out[order[k + 1]];
            Rational a_hi = a.exact ? a.value : a.hi;
            Rational b_lo = b.exact ? b.value : b.lo;
            // roots sit strictly inside their intervals, so touching is fine;
            // coprime factors cannot share an exact root
            bool overlap = !(a.exact && b.exact) && a_hi > b_lo;
            if (!overlap) continue;
            if (!a.exact) halve(a, owner[order[k]]);
            if (!b.exact) halve(b, owner[order[k + 1]]);
            again = true;
        }
        std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
            const Rational li = out[i].exact ? out[i].value : out[i].lo;
            const Rational lj = out[j].exact ? out[j].value : out[j].lo;
            return li < lj;
        });
    }
    std::vector<OracleRoot> sorted;
    sorted.reserve(out.size());
    for (std::size_t i : order) sorted.push_back(std::move(out[i]));
    return sorted;
}

std::optional<RatPoly> expr_to_ratpoly(const Expr& f) {
    using K = ExprKind;
    switch (f.kind()) {
        case K::Const:
            return RatPoly::constant(f.value());
        case K::Var:
            return RatPoly::x();
        case K::PiConst:
            return std::nullopt;
        case K::Neg: {
            auto u = expr_to_ratpoly(f.child());
            if (!u) return std::nullopt;
            return -*u;
        }
        case K::Add:
        case K::Sub:
        case K::Mul: {
            auto u = expr_to_ratpoly(f.left()), v = expr_to_ratpoly(f.right());
            if (!u || !v) return std::nullopt;
            if (f.kind() == K::Add) return *u + *v;
            if (f.kind() == K::Sub) return *u - *v;
            return *u * *v;
        }
        case K::Div: {
            auto u = expr_to_ratpoly(f.left()), v = expr_to_ratpoly(f.right());
            if (!u || !v) return std::nullopt;
            if (v->degree() != 0) return std::nullopt;  // only constant divisors stay polynomial
            return u->scaled(1 / (*v)[0]);
        }
        case K::IntPow: {
            auto u = expr_to_ratpoly(f.child());
            if (!u) return std::nullopt;
            RatPoly acc = RatPoly::constant(Rational(1));
            RatPoly base = *u;
            unsigned e = f.exponent();
            while (e > 0) {
                if (e & 1u) acc = acc * base;
                e >>= 1u;
                if (e) base = base * base;
            }
            return acc;
        }
        default:
            return std::nullopt;
    }
}

}  // namespace anaring
