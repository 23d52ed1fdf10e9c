#include "anaring/ideal.hpp"

#include <algorithm>

#include "anaring/errors.hpp"
#include "anaring/exact.hpp"
#include "anaring/roots.hpp"
#include "anaring/taylor.hpp"

namespace anaring {

Ideal Ideal::zero() {
    Ideal i;
    i.zero_ = true;
    return i;
}

Ideal Ideal::unit() { return Ideal(); }

Ideal Ideal::principal(Divisor d, std::optional<Expr> generator) {
    Ideal i;
    i.divisor_ = std::move(d);
    i.generator_ = std::move(generator);
    return i;
}

FromGeneratorResult from_generator(const Expr& f, const Config& cfg) {
    FromGeneratorResult r;
    IsolateResult iso = isolate_zeros(f, cfg);
    switch (iso.kind) {
        case IsolateKind::ZeroFunction:
            r.decided = true;
            r.ideal = Ideal::zero();
            return r;
        case IsolateKind::Divisor:
            r.decided = true;
            r.ideal = Ideal::principal(std::move(iso.divisor), normalize(f));
            return r;
        case IsolateKind::Undecidable:
            r.decided = false;
            r.unresolved = iso.unresolved;
            return r;
    }
    return r;
}

// ---------------------------------------------------------------------------
// point identity

namespace {

enum class PointRel { Same, Distinct, Undecidable };

struct PointCmp {
    PointRel rel = PointRel::Undecidable;
    Point a, b;  // possibly refined (Distinct guarantees they are disjoint)
};

bool pts_disjoint(const Point& a, const Point& b) {
    return a.upper() < b.lower() || b.upper() < a.lower();
}

// the certificate that travels with an enclosure beats the ideal's generator
const Expr* cert_fn(const Point& p, const std::optional<Expr>& fallback) {
    if (!p.owner().empty()) return &p.owner();
    return fallback ? &*fallback : nullptr;
}

// exact q against an enclosure with certifying function g
PointCmp cmp_exact_enclosure(const Point& qp, Point e, const Expr* g, const Config& cfg) {
    const Rational& q = qp.value();
    for (int round = 0;; ++round) {
        if (q < e.lower() || q > e.upper()) return {PointRel::Distinct, qp, e};
        if (g) {
            Sign s = sign_at(*g, q, cfg);
            if (s == Sign::Zero) return {PointRel::Same, qp, qp};  // unique zero in e is q
            if (s == Sign::Unknown) return {PointRel::Undecidable, qp, e};
            // q is not the zero; contract e until q falls outside
            if (round >= 3) return {PointRel::Undecidable, qp, e};
            try {
                Rational w = e.upper() - e.lower();
                e = refine(e, *g, w / (mpz_class(1) << 24), cfg);
            } catch (const PrecisionExhausted&) {
                return {PointRel::Undecidable, qp, e};
            }
            continue;
        }
        return {PointRel::Undecidable, qp, e};
    }
}

PointCmp compare_points(Point a, const std::optional<Expr>& ga, Point b,
                        const std::optional<Expr>& gb, const Config& cfg) {
    if (a.is_exact() && b.is_exact())
        return {a.value() == b.value() ? PointRel::Same : PointRel::Distinct, a, b};
    if (pts_disjoint(a, b)) return {PointRel::Distinct, a, b};
    const Expr* fa = a.is_exact() ? nullptr : cert_fn(a, ga);
    const Expr* fb = b.is_exact() ? nullptr : cert_fn(b, gb);
    if (a.is_exact()) return cmp_exact_enclosure(a, b, fb, cfg);
    if (b.is_exact()) {
        PointCmp c = cmp_exact_enclosure(b, a, fa, cfg);
        return {c.rel, c.b, c.a};
    }
    // two enclosures sharing territory
    bool same_fn = fa && fb && fa->same(*fb);
    for (int round = 0; round < 6; ++round) {
        // zeros of one function: an isolating enclosure nested inside another
        // forces both to hold the same zero (each isolates exactly one)
        if (same_fn && (b.interval().contains(a.interval()) ||
                        a.interval().contains(b.interval()))) {
            const Point& keep = a.upper() - a.lower() <= b.upper() - b.lower() ? a : b;
            return {PointRel::Same, keep, keep};
        }
        Rational olo = std::max(a.lower(), b.lower());
        Rational ohi = std::min(a.upper(), b.upper());
        if (ohi >= olo && fa && fb) {
            Rational q = simplest_rational_in(olo, ohi);
            if (sign_at(*fa, q, cfg) == Sign::Zero && sign_at(*fb, q, cfg) == Sign::Zero)
                return {PointRel::Same, Point::rational(q), Point::rational(q)};
        }
        Rational wa = a.upper() - a.lower();
        Rational wb = b.upper() - b.lower();
        try {
            // asymmetric targets: shrinking one inside the other settles the
            // same-zero case, walking apart settles the distinct case
            if (fa && !a.is_exact()) a = refine(a, *fa, wa / (mpz_class(1) << 24), cfg);
            if (fb && !b.is_exact() && round % 2 == 1)
                b = refine(b, *fb, wb / (mpz_class(1) << 8), cfg);
        } catch (const PrecisionExhausted&) {
            break;
        }
        if (pts_disjoint(a, b)) return {PointRel::Distinct, a, b};
        if (!fa && !fb) break;
    }
    return {PointRel::Undecidable, a, b};
}

enum class Mode { Min, Add, Max, Sub };

int combine(Mode mode, int ma, int mb) {
    switch (mode) {
        case Mode::Min: return std::min(ma, mb);
        case Mode::Add: return ma + mb;
        case Mode::Max: return std::max(ma, mb);
        case Mode::Sub: return std::max(ma - mb, 0);
    }
    return 0;
}

Divisor merge_divisors(const Divisor& A, const std::optional<Expr>& fa, const Divisor& B,
                       const std::optional<Expr>& fb, Mode mode, const Config& cfg) {
    const bool solo_a = mode != Mode::Min;             // gcd drops non-common points
    const bool solo_b = mode == Mode::Add || mode == Mode::Max;
    std::vector<DivisorEntry> out;
    std::size_t i = 0, j = 0;
    Point pa, pb;
    bool have_pa = false, have_pb = false;
    while (i < A.size() && j < B.size()) {
        const Point& ea = have_pa ? pa : A[i].point;
        const Point& eb = have_pb ? pb : B[j].point;
        if (ea.upper() < eb.lower()) {
            if (solo_a) out.push_back({ea, A[i].multiplicity});
            ++i;
            have_pa = false;
            continue;
        }
        if (eb.upper() < ea.lower()) {
            if (solo_b) out.push_back({eb, B[j].multiplicity});
            ++j;
            have_pb = false;
            continue;
        }
        PointCmp pc = compare_points(ea, fa, eb, fb, cfg);
        if (pc.rel == PointRel::Undecidable) throw PointIdentityUndecidable();
        if (pc.rel == PointRel::Same) {
            int m = combine(mode, A[i].multiplicity, B[j].multiplicity);
            Point keep = pc.a.is_exact() ? pc.a : pc.b;
            if (m > 0) out.push_back({keep, m});
            ++i;
            ++j;
            have_pa = have_pb = false;
            continue;
        }
        // refined disjoint points; stash them and loop
        pa = pc.a;
        pb = pc.b;
        have_pa = have_pb = true;
    }
    while (i < A.size()) {
        if (solo_a) out.push_back({have_pa ? pa : A[i].point, A[i].multiplicity});
        have_pa = false;
        ++i;
    }
    while (j < B.size()) {
        if (solo_b) out.push_back({have_pb ? pb : B[j].point, B[j].multiplicity});
        have_pb = false;
        ++j;
    }
    return Divisor(std::move(out));
}

std::optional<Expr> combined_generator(const Ideal& I, const Ideal& J, Mode mode) {
    if (mode == Mode::Add && I.generator() && J.generator())
        return normalize(Expr::mul(*I.generator(), *J.generator()));
    return std::nullopt;
}

}  // namespace

Ideal sum(const Ideal& I, const Ideal& J, const Config& cfg) {
    if (I.is_zero()) return J;
    if (J.is_zero()) return I;
    return Ideal::principal(
        merge_divisors(I.divisor(), I.generator(), J.divisor(), J.generator(), Mode::Min, cfg));
}

Ideal product(const Ideal& I, const Ideal& J, const Config& cfg) {
    if (I.is_zero() || J.is_zero()) return Ideal::zero();
    return Ideal::principal(
        merge_divisors(I.divisor(), I.generator(), J.divisor(), J.generator(), Mode::Add, cfg),
        combined_generator(I, J, Mode::Add));
}

Ideal intersect(const Ideal& I, const Ideal& J, const Config& cfg) {
    if (I.is_zero() || J.is_zero()) return Ideal::zero();
    return Ideal::principal(
        merge_divisors(I.divisor(), I.generator(), J.divisor(), J.generator(), Mode::Max, cfg));
}

Ideal quotient(const Ideal& I, const Ideal& J, const Config& cfg) {
    if (J.is_zero()) throw ZeroDivisorArgument();
    if (I.is_zero()) return Ideal::zero();
    return Ideal::principal(
        merge_divisors(I.divisor(), I.generator(), J.divisor(), J.generator(), Mode::Sub, cfg));
}

namespace {

// does g appear as a multiplicative factor of f, structurally?
bool has_structural_factor(const Expr& f, const Expr& g) {
    if (f.same(g)) return true;
    switch (f.kind()) {
        case ExprKind::Mul:
            return has_structural_factor(f.left(), g) || has_structural_factor(f.right(), g);
        case ExprKind::Neg:
            return has_structural_factor(f.child(), g);
        case ExprKind::IntPow:
            return f.exponent() >= 1 && has_structural_factor(f.child(), g);
        case ExprKind::Div:
            return has_structural_factor(f.left(), g);
        default:
            return false;
    }
}

}  // namespace

Tribool membership(const Expr& f, const Ideal& I, const Config& cfg) {
    Expr fn = normalize(f);
    if (fn.is_zero()) return Tribool::Yes;  // 0 lies in every ideal
    check_analytic(fn, cfg);
    // f = g*h is in <g> outright; this settles irrational-zero generators
    // that no pointwise numeric test could confirm
    if (!I.is_zero() && I.generator() && has_structural_factor(fn, *I.generator()))
        return Tribool::Yes;
    if (I.is_zero()) {
        // f must be the zero function; a certified divisor refutes that
        IsolateResult iso = isolate_zeros(fn, cfg);
        if (iso.kind == IsolateKind::ZeroFunction) return Tribool::Yes;
        if (iso.kind == IsolateKind::Divisor) return Tribool::No;
        return Tribool::Unknown;
    }
    for (const DivisorEntry& e : I.divisor()) {
        if (e.point.is_exact()) {
            auto j = exact_multiplicity_at(fn, e.point.value(), cfg.mult_cap, cfg);
            if (!j) return Tribool::Unknown;
            if (*j < e.multiplicity) return Tribool::No;
            continue;
        }
        // enclosure point: refute by excluding 0, confirm only through an
        // exact witness shared with the certifying function
        Point p = e.point;
        const Expr* g = cert_fn(p, I.generator());
        for (int round = 0; round < 4; ++round) {
            bool excluded = false;
            for (int prec : cfg.ladder()) {
                Interval ev = eval_enclosure(fn, p.interval(), prec);
                if (!ev.contains_zero()) {
                    excluded = true;
                    break;
                }
            }
            if (excluded) return Tribool::No;
            Rational q = simplest_rational_in(p.lower(), p.upper());
            if (g && sign_at(*g, q, cfg) == Sign::Zero) {
                auto j = exact_multiplicity_at(fn, q, cfg.mult_cap, cfg);
                if (!j) return Tribool::Unknown;
                return *j >= e.multiplicity ? Tribool::Yes : Tribool::No;
            }
            if (!g) break;
            try {
                Rational w = p.upper() - p.lower();
                p = refine(p, *g, w / (mpz_class(1) << 16), cfg);
            } catch (const PrecisionExhausted&) {
                break;
            }
        }
        return Tribool::Unknown;
    }
    return Tribool::Yes;
}

bool is_maximal(const Ideal& I) {
    return !I.is_zero() && I.divisor().size() == 1 && I.divisor()[0].multiplicity == 1;
}

bool is_prime(const Ideal& I) { return I.is_zero() || is_maximal(I); }

std::vector<MaximalFactor> factor_maximals(const Ideal& I) {
    if (I.is_zero()) throw ZeroIdealNotFactorable();
    std::vector<MaximalFactor> out;
    out.reserve(I.divisor().size());
    for (const DivisorEntry& e : I.divisor()) out.push_back({e.point, e.multiplicity});
    return out;
}

Ideal radical(const Ideal& I) {
    if (I.is_zero()) return I;
    std::vector<DivisorEntry> entries;
    entries.reserve(I.divisor().size());
    for (const DivisorEntry& e : I.divisor()) entries.push_back({e.point, 1});
    return Ideal::principal(Divisor(std::move(entries)), std::nullopt);
}

std::variant<Expr, Unrepresentable> canonical_generator(const Ideal& I) {
    bool all_exact = true;
    for (const DivisorEntry& e : I.divisor())
        if (!e.point.is_exact()) all_exact = false;
    if (!all_exact) {
        Unrepresentable u;
        for (const DivisorEntry& e : I.divisor()) u.factors.push_back({e.point, e.multiplicity});
        return u;
    }
    Expr acc = Expr::constant(1);
    bool first = true;
    for (const DivisorEntry& e : I.divisor()) {
        Expr factor = normalize(Expr::sub(Expr::var(), Expr::constant(e.point.value())));
        if (e.multiplicity > 1)
            factor = Expr::ipow(std::move(factor), static_cast<unsigned>(e.multiplicity));
        acc = first ? std::move(factor) : Expr::mul(std::move(acc), std::move(factor));
        first = false;
    }
    return acc;
}

Tribool ideal_equals(const Ideal& I, const Ideal& J, const Config& cfg) {
    if (I.is_zero() || J.is_zero()) return I.is_zero() == J.is_zero() ? Tribool::Yes : Tribool::No;
    if (I.divisor().size() != J.divisor().size()) return Tribool::No;
    for (std::size_t i = 0; i < I.divisor().size(); ++i) {
        const DivisorEntry& a = I.divisor()[i];
        const DivisorEntry& b = J.divisor()[i];
        if (a.multiplicity != b.multiplicity) return Tribool::No;
        PointCmp pc = compare_points(a.point, I.generator(), b.point, J.generator(), cfg);
        if (pc.rel == PointRel::Undecidable) return Tribool::Unknown;
        if (pc.rel == PointRel::Distinct) return Tribool::No;
    }
    return Tribool::Yes;
}

}  // namespace anaring
