#include "anaring/roots.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "anaring/errors.hpp"
#include "anaring/exact.hpp"
#include "anaring/ratpoly.hpp"
#include "anaring/taylor.hpp"

namespace anaring {

namespace {

// ---------------------------------------------------------------------------
// plumbing

std::size_t node_count(const Expr& e) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < e.arity(); ++i) n += node_count(e.child(i));
    return n;
}

// bits needed to hold a dyadic rational exactly in an mpfr significand
int dyadic_prec(const Rational& q) {
    return static_cast<int>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
                            mpz_sizeinbase(q.get_den().get_mpz_t(), 2)) + 8;
}

struct Seg {
    Rational lo, hi;
    Rational width() const { return hi - lo; }
    bool empty() const { return hi <= lo; }
};

Interval seg_iv(const Seg& s, int prec) {
    int p = std::max({prec, dyadic_prec(s.lo), dyadic_prec(s.hi)});
    return Interval::of_rationals(s.lo, s.hi, p);
}

Rational exact_width(const Interval& x) {
    return x.hi().to_rational() - x.lo().to_rational();
}

// Derivative chain of the target function, normalized, extended on demand.
// Oversized entries (symbolic swell) are flagged instead of evaluated.
// deque: growing the chain must not invalidate handed-out references.
struct Chain {
    std::deque<Expr> d;
    bool oversized = false;
    static constexpr std::size_t kNodeLimit = 200000;

    explicit Chain(Expr f) { d.push_back(std::move(f)); }

    const Expr* at(int k) {
        while (static_cast<int>(d.size()) <= k) {
            if (oversized) return nullptr;
            Expr next = normalize(differentiate(d.back()));
            if (node_count(next) > kNodeLimit) {
                oversized = true;
                return nullptr;
            }
            d.push_back(std::move(next));
        }
        return &d[k];
    }
};

struct CertZero {
    Point point;
    int mult = 1;
    Rational lo, hi;  // rational bounds of the location
};

bool cert_less(const CertZero& a, const CertZero& b) { return a.lo < b.lo; }

struct RootCtx {
    const Config& cfg;
    Chain chain;
    std::vector<int> ladder;
    std::map<std::pair<int, Rational>, Sign> sign_memo;
    // exact climbs already attempted: (level, q) -> result
    std::map<std::pair<int, Rational>, std::optional<std::pair<CertZero, Seg>>> climb_memo;
    long budget;  // box-processing budget; exhaustion means Undecidable
    Interval unresolved = Interval::unit();

    RootCtx(const Config& c, Expr f, long budget_boxes = 60000)
        : cfg(c), chain(std::move(f)), ladder(c.ladder()), budget(budget_boxes) {}

    // exact rational-coefficient forms of the chain levels; derived by
    // RatPoly::derivative so polynomial inputs never suffer the symbolic
    // swell of repeatedly differentiating Horner-form expressions
    std::deque<std::optional<RatPoly>> poly_chain;
    const RatPoly* poly_at(int k) {
        if (poly_chain.empty()) poly_chain.push_back(expr_to_ratpoly(chain.d[0]));
        if (!poly_chain[0]) return nullptr;
        while (static_cast<int>(poly_chain.size()) <= k)
            poly_chain.push_back(poly_chain.back()->derivative());
        return &*poly_chain[k];
    }

    Sign sign(int k, const Rational& q) {
        auto key = std::make_pair(k, q);
        auto it = sign_memo.find(key);
        if (it != sign_memo.end()) return it->second;
        Sign s;
        if (const RatPoly* P = poly_at(k)) {
            s = sign_from_int(sgn(P->eval(q)));
        } else {
            const Expr* g = chain.at(k);
            s = g ? sign_at(*g, q, cfg) : Sign::Unknown;
        }
        sign_memo.emplace(std::move(key), s);
        return s;
    }
};

// in-place Horner shift: Taylor coefficients of p around c, exactly
std::vector<Rational> poly_taylor_at(const RatPoly& p, const Rational& c) {
    std::vector<Rational> cs = p.coeffs();
    int n = p.degree();
    for (int j = 0; j < n; ++j)
        for (int i = n - 1; i >= j; --i) cs[i] += c * cs[i + 1];
    return cs;
}

// Interval evaluation of chain level k over a segment. Narrow boxes that
// straddle zero get a centered form, then a Taylor-model range: near a
// multiplicity-m zero the naive forms overestimate so badly that subdivision
// degenerates, while the model's polynomial part captures the vanishing.
Interval eval_box(RootCtx& ctx, int k, const Seg& s, int prec) {
    Interval X = seg_iv(s, prec);
    if (const RatPoly* P = ctx.poly_at(k)) {
        // exact Taylor shift to the midpoint kills the dependency problem;
        // the polynomial part is complete, so no remainder term is needed
        if (P->degree() < 0) return Interval::from_long(0);
        Rational mid = (s.lo + s.hi) / 2;
        std::vector<Rational> qt = poly_taylor_at(*P, mid);
        Interval t = iv_sub(X, Interval::of_rational(mid, std::max(prec, dyadic_prec(mid))), prec);
        Interval acc = Interval::from_long(0);
        for (std::size_t i = qt.size(); i-- > 0;)
            acc = iv_add(iv_mul(acc, t, prec), Interval::of_rational(qt[i], prec), prec);
        return acc;
    }
    const Expr* g = ctx.chain.at(k);
    if (!g) return Interval::entire();
    Interval direct = eval_enclosure(*g, X, prec);
    if (!direct.contains_zero() || direct.is_entire()) return direct;
    Interval best = direct;
    if (s.width() < Rational(1, 8)) {
        const Expr* gd = ctx.chain.at(k + 1);
        if (gd) {
            Rational mid = (s.lo + s.hi) / 2;
            Interval M = Interval::of_rational(mid, std::max(prec, dyadic_prec(mid)));
            Interval v = eval_enclosure(*g, M, prec);
            Interval dv = eval_enclosure(*gd, X, prec);
            if (!v.is_entire() && !dv.is_entire()) {
                Interval c = iv_add(v, iv_mul(dv, iv_sub(X, M, prec), prec), prec);
                if (!c.disjoint(best)) best = iv_meet(c, best);
                if (!best.contains_zero()) return best;
            }
        }
    }
    return best;
}

// Taylor-model range over a narrow box; order must reach past the local
// multiplicity for the cancellation to become visible.
Interval eval_box_tm(RootCtx& ctx, int k, const Seg& s, int prec, int order) {
    const Expr* g = ctx.chain.at(k);
    if (!g) return Interval::entire();
    try {
        Rational mid = (s.lo + s.hi) / 2;
        TaylorModel tm = taylor_model(*g, seg_iv(s, prec), Point::rational(mid), order, prec);
        return tm.range(prec);
    } catch (const NotAnalyticError&) {
        return Interval::entire();
    }
}

// ---------------------------------------------------------------------------
// interval Newton

enum class NewtonOutcome { Empty, NoInfo, Shrunk, Unique };

NewtonOutcome newton_step(RootCtx& ctx, int k, const Interval& X, int prec, Interval& out) {
    Rational mlo = X.lo().to_rational(), mhi = X.hi().to_rational();
    Rational mid = (mlo + mhi) / 2;
    Interval M = Interval::of_rational(mid, std::max(prec, dyadic_prec(mid)));
    Interval gm = eval_box(ctx, k, Seg{mid, mid}, prec);
    Interval gdv = eval_box(ctx, k + 1, Seg{mlo, mhi}, prec);
    if (gm.is_entire() || gdv.is_entire() || gdv.contains_zero()) return NewtonOutcome::NoInfo;
    Interval N = iv_sub(M, iv_div(gm, gdv, prec), prec);
    if (N.disjoint(X)) return NewtonOutcome::Empty;
    out = iv_meet(N, X);
    if (X.strictly_contains(N)) return NewtonOutcome::Unique;
    return NewtonOutcome::Shrunk;
}

// Contract an interval known to hold a unique simple zero of chain[k] down to
// width <= target (best effort within the precision cap).
Interval newton_refine(RootCtx& ctx, int k, Interval X, const Rational& target) {
    Rational w = exact_width(X);
    int stuck = 0;
    while (w > target && stuck < 4) {
        int need = dyadic_prec(target) + 32;
        int prec = std::min(std::max(need, 64), std::max(ctx.cfg.precision_cap, 64));
        Interval N;
        NewtonOutcome oc = newton_step(ctx, k, X, prec, N);
        if (oc == NewtonOutcome::Unique || oc == NewtonOutcome::Shrunk) {
            Rational nw = exact_width(N);
            if (nw < w) {
                X = N;
                w = nw;
                stuck = 0;
                continue;
            }
        }
        // fall back to one bisection step on the midpoint sign
        Rational a = X.lo().to_rational(), b = X.hi().to_rational();
        Rational mid = (a + b) / 2;
        Sign sa = ctx.sign(k, a), sm = ctx.sign(k, mid);
        if (sm == Sign::Zero) {
            // landed on the zero; collapse hard around it
            Rational r = (b - a) / 1024;
            X = seg_iv(Seg{std::max(a, Rational(mid - r)), std::min(b, Rational(mid + r))}, prec);
        } else if (sa != Sign::Unknown && sm != Sign::Unknown && sa != sm) {
            X = seg_iv(Seg{a, mid}, prec);
        } else if (sm != Sign::Unknown) {
            X = seg_iv(Seg{mid, b}, prec);
        } else {
            ++stuck;
            continue;
        }
        Rational nw = exact_width(X);
        if (nw >= w) ++stuck;
        w = nw;
    }
    return X;
}

// ---------------------------------------------------------------------------
// exact climbs: zeros at rational points, certified symbolically

// Least j >= 0 with chain[k+j](q) certifiably nonzero; Zero all the way to
// the cap (or an Unknown) yields nullopt.
std::optional<int> climb_count(RootCtx& ctx, int k, const Rational& q) {
    int j = 0;
    while (k + j <= ctx.cfg.mult_cap) {
        Sign s = ctx.sign(k + j, q);
        if (s == Sign::Zero) {
            ++j;
            continue;
        }
        if (s == Sign::Unknown) return std::nullopt;
        return j;
    }
    return std::nullopt;
}

// Certify an exact zero of chain[k] at q: multiplicity by exact evaluation of
// the derivative chain, uniqueness by bounding chain[k+m] away from 0 on a
// neighborhood of q.
std::optional<std::pair<CertZero, Seg>> exact_climb(RootCtx& ctx, int k, const Rational& q) {
    auto key = std::make_pair(k, q);
    auto it = ctx.climb_memo.find(key);
    if (it != ctx.climb_memo.end()) return it->second;
    std::optional<std::pair<CertZero, Seg>> result;
    std::optional<int> mj = climb_count(ctx, k, q);
    if (mj && *mj >= 1) {
        int m = *mj;
        Rational delta_min = Rational(mpz_class(1), mpz_class(1) << 148);
        for (int prec : ctx.ladder) {
            Rational delta(mpz_class(1), mpz_class(1) << 20);
            while (delta >= delta_min) {
                Seg e{std::max(Rational(0), Rational(q - delta)), std::min(Rational(1), Rational(q + delta))};
                Interval ev = eval_box(ctx, k + m, e, prec);
                if (!ev.contains_zero() && !ev.is_entire()) {
                    CertZero cz;
                    cz.point = Point::rational(q);
                    cz.mult = m;
                    cz.lo = q;
                    cz.hi = q;
                    result = std::make_pair(std::move(cz), e);
                    break;
                }
                delta /= 256;
            }
            if (result) break;
        }
    }
    ctx.climb_memo.emplace(std::move(key), result);
    return result;
}

// ---------------------------------------------------------------------------
// monotone gaps

// chain[k] is strictly monotone on [a,b] (guaranteed by the caller's
// partition) and has definite opposite signs at the endpoints: bisect to the
// single zero.
std::optional<CertZero> monotone_zero(RootCtx& ctx, int k, Rational a, Rational b, Sign sa) {
    const Rational& tol = ctx.cfg.tolerance;
    while (b - a > tol) {
        Rational w = b - a;
        // split points with decidable signs; a few fallbacks for flat spots
        static const std::pair<int, int> fr[] = {{1, 2}, {3, 8}, {5, 8}, {7, 16}, {9, 16}};
        bool advanced = false;
        for (const auto& [num, den] : fr) {
            Rational t = a + w * Rational(num, den);
            Sign st = ctx.sign(k, t);
            if (st == Sign::Zero) {
                auto cz = exact_climb(ctx, k, t);
                if (!cz) return std::nullopt;
                return cz->first;
            }
            if (st == Sign::Unknown) continue;
            if (st == sa)
                a = t;
            else
                b = t;
            advanced = true;
            break;
        }
        if (!advanced) return std::nullopt;
    }
    Rational q = simplest_rational_in(a, b);
    if (ctx.sign(k, q) == Sign::Zero) {
        auto cz = exact_climb(ctx, k, q);
        if (cz) return cz->first;
        return std::nullopt;
    }
    Interval e = seg_iv(Seg{a, b}, 128);
    int dsign = 0;
    for (int p : ctx.ladder) {
        Interval dv = eval_box(ctx, k + 1, Seg{a, b}, p);
        if (!dv.is_entire() && dv.sign() != 0) {
            dsign = dv.sign();
            break;
        }
        if (p >= 256) break;  // the sign-change certificate stands on its own
    }
    CertZero cz;
    const Expr* own = ctx.chain.at(k);
    cz.point = Point::enclosure(e, 1, dsign, own ? *own : Expr());
    cz.mult = 1;
    cz.lo = a;
    cz.hi = b;
    return cz;
}

// ---------------------------------------------------------------------------
// the per-level sweep

struct Sweep {
    RootCtx& ctx;
    int level;
    std::vector<CertZero> zeros;
    std::vector<Seg> exclusions;
    std::set<Rational> reported_exact;
    std::deque<Seg> work;
    std::vector<Seg> stalled;
    bool failed = false;

    Sweep(RootCtx& c, int k) : ctx(c), level(k) {}

    void fail(const Seg& s) {
        if (!failed) ctx.unresolved = seg_iv(s, 64);
        failed = true;
    }

    bool add_exact(const Rational& q) {
        auto r = exact_climb(ctx, level, q);
        if (!r) return false;
        if (!reported_exact.count(q)) {
            zeros.push_back(r->first);
            exclusions.push_back(r->second);
            reported_exact.insert(q);
        }
        return true;
    }

    // Subtract the exclusion list from s; true when s was affected (parts are
    // re-queued).
    bool clip(const Seg& s) {
        for (const Seg& e : exclusions) {
            if (e.hi <= s.lo || s.hi <= e.lo) continue;
            Seg left{s.lo, e.lo};
            Seg right{e.hi, s.hi};
            if (!left.empty()) work.emplace_back(left);
            if (!right.empty()) work.emplace_back(right);
            return true;
        }
        return false;
    }

    void process(const Seg& s) {
        if (s.empty()) return;
        if (--ctx.budget < 0) {
            fail(s);
            return;
        }
        if (clip(s)) return;
        // exact zeros at the box endpoints
        for (const Rational* t : {&s.lo, &s.hi}) {
            if (reported_exact.count(*t)) continue;
            Sign st = ctx.sign(level, *t);
            if (st == Sign::Zero) {
                if (!add_exact(*t)) {
                    fail(s);
                    stalled.push_back(s);
                    return;
                }
                work.emplace_front(s);  // re-clip against the new exclusion
                return;
            }
        }
        // outcome of one precision attempt
        enum class Attempt { Excluded, Done, Continue };
        auto attempt = [&](int prec, int tm_order) -> Attempt {
            Interval ev = eval_box(ctx, level, s, prec);
            if (!ev.contains_zero()) return Attempt::Excluded;
            Interval N;
            NewtonOutcome oc = newton_step(ctx, level, seg_iv(s, prec), prec, N);
            if (oc == NewtonOutcome::Empty) return Attempt::Excluded;
            if (oc == NewtonOutcome::Unique) {
                // unique simple zero in s; multiplicity 1 is certified by
                // Newton, so a failed exact upgrade keeps the enclosure form
                Interval R = newton_refine(ctx, level, N, ctx.cfg.tolerance);
                Rational ra = R.lo().to_rational(), rb = R.hi().to_rational();
                CertZero cz;
                cz.mult = 1;
                Rational q = simplest_rational_in(ra, rb);
                if (ctx.sign(level, q) == Sign::Zero && !reported_exact.count(q)) {
                    cz.point = Point::rational(q);
                    cz.lo = q;
                    cz.hi = q;
                    reported_exact.insert(q);
                } else {
                    int dsign = 0;
                    Interval dvi = eval_box(
                        ctx, level + 1,
                        Seg{R.lo().to_rational(), R.hi().to_rational()}, prec);
                    if (!dvi.is_entire()) dsign = dvi.sign();
                    const Expr* own = ctx.chain.at(level);
                    cz.point = Point::enclosure(R, 1, dsign, own ? *own : Expr());
                    cz.lo = ra;
                    cz.hi = rb;
                }
                zeros.push_back(std::move(cz));
                exclusions.push_back(s);  // the box held exactly this one zero
                return Attempt::Done;
            }
            if (tm_order > 0 && s.width() < Rational(1, 1024)) {
                Interval tv = eval_box_tm(ctx, level, s, prec, tm_order);
                if (!tv.is_entire() && !tv.contains_zero()) return Attempt::Excluded;
            }
            return Attempt::Continue;
        };
        // cheap rungs first; geometry (splitting) beats precision for wide
        // boxes, so the expensive rungs run only at tolerance width
        const int nrungs = static_cast<int>(ctx.ladder.size());
        switch (attempt(ctx.ladder[0], 0)) {
            case Attempt::Excluded: return;
            case Attempt::Done: return;
            case Attempt::Continue: break;
        }
        if (nrungs > 1) {
            switch (attempt(ctx.ladder[1], 6)) {
                case Attempt::Excluded: return;
                case Attempt::Done: return;
                case Attempt::Continue: break;
            }
        }
        if (s.width() <= ctx.cfg.tolerance) {
            int deep_order = std::min(ctx.cfg.mult_cap + 1, 12);
            for (int r = std::min(2, nrungs - 1); r < nrungs; ++r) {
                switch (attempt(ctx.ladder[r], deep_order)) {
                    case Attempt::Excluded: return;
                    case Attempt::Done: return;
                    case Attempt::Continue: break;
                }
            }
            stalled.push_back(s);
            return;
        }
        // split at the simplest rational in the middle third: planted rational
        // zeros are met head-on instead of being straddled forever
        Rational w = s.width();
        Rational mid = simplest_rational_in(s.lo + w / 3, s.hi - w / 3);
        if (!reported_exact.count(mid) && ctx.sign(level, mid) == Sign::Zero) {
            if (!add_exact(mid)) {
                fail(s);
                stalled.push_back(s);
                return;
            }
            work.emplace_front(s);
            return;
        }
        work.emplace_back(Seg{s.lo, mid});
        work.emplace_back(Seg{mid, s.hi});
    }

    void run(std::vector<Seg> segs) {
        for (Seg& s : segs)
            if (!s.empty()) work.emplace_back(s);
        while (!work.empty() && !failed) {
            Seg s = work.front();
            work.pop_front();
            process(s);
        }
    }
};

std::optional<std::vector<CertZero>> isolate_level(RootCtx& ctx, int k, std::vector<Seg> segs);

// Resolve one stalled cluster of chain[k] using the zeros of chain[k+1].
bool resolve_cluster(RootCtx& ctx, int k, const Seg& c, Sweep& sweep) {
    if (k + 1 > ctx.cfg.mult_cap) return false;
    auto sub = isolate_level(ctx, k + 1, {c});
    if (!sub) return false;
    std::sort(sub->begin(), sub->end(), cert_less);

    auto handle_endpoint = [&](const Rational& t) -> bool {
        Sign s = ctx.sign(k, t);
        if (s == Sign::Unknown) return false;
        if (s == Sign::Zero) return sweep.add_exact(t);
        return true;
    };

    // walk gaps between derivative zeros; chain[k] is strictly monotone on
    // each, so endpoint signs decide everything
    auto handle_gap = [&](const Rational& a, const Rational& b) -> bool {
        if (b <= a) return true;
        Sign sa = ctx.sign(k, a), sb = ctx.sign(k, b);
        if (sa == Sign::Unknown || sb == Sign::Unknown) return false;
        if (sa == Sign::Zero || sb == Sign::Zero) {
            if (sa == Sign::Zero && !sweep.add_exact(a)) return false;
            if (sb == Sign::Zero && !sweep.add_exact(b)) return false;
            return true;  // monotone: an endpoint zero is the only zero
        }
        if (sa == sb) return true;
        auto cz = monotone_zero(ctx, k, a, b, sa);
        if (!cz) return false;
        if (cz->point.is_exact()) {
            if (!sweep.reported_exact.count(cz->point.value())) {
                sweep.reported_exact.insert(cz->point.value());
                sweep.zeros.push_back(*cz);
            }
        } else {
            sweep.zeros.push_back(*cz);
        }
        return true;
    };

    Rational pos = c.lo;
    if (!handle_endpoint(c.lo)) return false;
    for (const CertZero& z : *sub) {
        if (z.hi < c.lo || z.lo > c.hi) continue;
        Rational blo = std::max(c.lo, z.lo), bhi = std::min(c.hi, z.hi);
        if (!handle_gap(pos, blo)) return false;
        if (z.point.is_exact()) {
            const Rational& q = z.point.value();
            Sign sq = ctx.sign(k, q);
            if (sq == Sign::Unknown) return false;
            if (sq == Sign::Zero && !sweep.add_exact(q)) return false;
        } else {
            // a simple zero of chain[k+1] inside an enclosure E: does chain[k]
            // vanish there too? shrink E and decide
            Seg e{blo, bhi};
            bool resolved = false;
            for (int p : ctx.ladder) {
                Interval ev = eval_box(ctx, k, e, p);
                if (!ev.contains_zero()) {
                    resolved = true;
                    break;
                }
                Interval r = newton_refine(ctx, k + 1, seg_iv(e, p), e.width() / 1024);
                Rational ra = r.lo().to_rational(), rb = r.hi().to_rational();
                // the shells freed by refinement are monotone gap material
                if (!handle_gap(e.lo, ra)) return false;
                if (!handle_gap(rb, e.hi)) return false;
                e = Seg{ra, rb};
                Rational q = simplest_rational_in(ra, rb);
                if (ctx.sign(k + 1, q) == Sign::Zero && ctx.sign(k, q) == Sign::Zero) {
                    if (!sweep.add_exact(q)) return false;
                    resolved = true;
                    break;
                }
            }
            if (!resolved) return false;
        }
        pos = bhi;
    }
    if (!handle_gap(pos, c.hi)) return false;
    if (!handle_endpoint(c.hi)) return false;
    return true;
}

std::vector<Seg> merge_clusters(std::vector<Seg> boxes) {
    std::sort(boxes.begin(), boxes.end(), [](const Seg& a, const Seg& b) { return a.lo < b.lo; });
    std::vector<Seg> out;
    for (const Seg& s : boxes) {
        if (!out.empty() && s.lo <= out.back().hi)
            out.back().hi = std::max(out.back().hi, s.hi);
        else
            out.push_back(s);
    }
    return out;
}

// A stalled cluster: first look for a rational zero hiding in it (the common
// case: a multiple rational root), then fall back to the derivative-chain
// partition.
bool settle_cluster(RootCtx& ctx, int k, const Seg& c, Sweep& sweep, int depth) {
    if (depth > 48 || ctx.budget < 0) return false;
    Rational q = simplest_rational_in(c.lo, c.hi);
    if (ctx.sign(k, q) == Sign::Zero) {
        if (!sweep.add_exact(q)) return false;
        // other zeros may sit beside q; re-sweep the remainder of the cluster
        Sweep again(ctx, k);
        again.exclusions = sweep.exclusions;
        again.reported_exact = sweep.reported_exact;
        again.run({c});
        if (again.failed) return false;
        for (auto& z : again.zeros) sweep.zeros.push_back(std::move(z));
        sweep.exclusions = std::move(again.exclusions);
        sweep.reported_exact = std::move(again.reported_exact);
        for (const Seg& c2 : merge_clusters(std::move(again.stalled)))
            if (!settle_cluster(ctx, k, c2, sweep, depth + 1)) return false;
        return true;
    }
    return resolve_cluster(ctx, k, c, sweep);
}

std::optional<std::vector<CertZero>> isolate_level(RootCtx& ctx, int k, std::vector<Seg> segs) {
    Sweep sweep(ctx, k);
    sweep.run(std::move(segs));
    if (sweep.failed) return std::nullopt;
    for (const Seg& c : merge_clusters(std::move(sweep.stalled))) {
        if (!settle_cluster(ctx, k, c, sweep, 0)) {
            ctx.unresolved = seg_iv(c, 64);
            return std::nullopt;
        }
    }
    std::sort(sweep.zeros.begin(), sweep.zeros.end(), cert_less);
    return std::move(sweep.zeros);
}

// ---------------------------------------------------------------------------
// analyticity

// nullopt when g is certified nonvanishing on [0,1]; otherwise a witness box.
std::optional<Interval> nonvanishing_witness(const Expr& g, const Config& cfg) {
    RootCtx ctx(cfg, g, 20000);
    std::deque<Seg> work;
    work.emplace_back(Seg{Rational(0), Rational(1)});
    while (!work.empty()) {
        Seg s = work.front();
        work.pop_front();
        if (--ctx.budget < 0) return seg_iv(s, 64);
        bool excluded = false;
        for (int prec : ctx.ladder) {
            Interval ev = eval_box(ctx, 0, s, prec);
            if (!ev.contains_zero()) {
                excluded = true;
                break;
            }
        }
        if (excluded) continue;
        if (s.width() <= cfg.tolerance) return seg_iv(s, 64);
        Rational mid = (s.lo + s.hi) / 2;
        work.emplace_back(Seg{s.lo, mid});
        work.emplace_back(Seg{mid, s.hi});
    }
    return std::nullopt;
}

// innermost first: a denominator's own denominators are vetted before it is
// evaluated
std::optional<Interval> analytic_witness(const Expr& f, const Config& cfg) {
    for (std::size_t i = 0; i < f.arity(); ++i)
        if (auto w = analytic_witness(f.child(i), cfg)) return w;
    if (f.kind() == ExprKind::Div) {
        Expr den = normalize(f.right());
        if (den.is_const()) {
            if (sgn(den.value()) == 0) return Interval::unit();
            return std::nullopt;
        }
        return nonvanishing_witness(den, cfg);
    }
    return std::nullopt;
}

}  // namespace

bool is_analytic(const Expr& f, const Config& cfg, Interval* witness) {
    std::optional<Interval> w;
    try {
        w = analytic_witness(f, cfg);
    } catch (const DivisionByZeroConstant&) {
        w = Interval::unit();
    }
    if (w && witness) *witness = *w;
    return !w;
}

void check_analytic(const Expr& f, const Config& cfg) {
    Interval w;
    if (!is_analytic(f, cfg, &w))
        throw NotAnalyticError(w.lo().to_decimal(12, MPFR_RNDD), w.hi().to_decimal(12, MPFR_RNDU));
}

IsolateResult isolate_zeros(const Expr& f, const Config& cfg) {
    Expr fn = normalize(f);
    if (fn.is_zero()) {
        IsolateResult r;
        r.kind = IsolateKind::ZeroFunction;
        return r;
    }
    check_analytic(fn, cfg);
    RootCtx ctx(cfg, fn);
    auto zeros = isolate_level(ctx, 0, {Seg{Rational(0), Rational(1)}});
    IsolateResult r;
    if (!zeros) {
        r.kind = IsolateKind::Undecidable;
        r.unresolved = ctx.unresolved;
        return r;
    }
    std::vector<DivisorEntry> entries;
    entries.reserve(zeros->size());
    for (auto& z : *zeros) entries.push_back({std::move(z.point), z.mult});
    r.kind = IsolateKind::Divisor;
    r.divisor = Divisor(std::move(entries));
    return r;
}

std::optional<int> exact_multiplicity_at(const Expr& f, const Rational& q, int bound,
                                         const Config& cfg) {
    RootCtx ctx(cfg, normalize(f));
    int j = 0;
    while (j <= bound) {
        Sign s = ctx.sign(j, q);
        if (s == Sign::Zero) {
            ++j;
            continue;
        }
        if (s == Sign::Unknown) return std::nullopt;
        return j;
    }
    return std::nullopt;
}

MultiplicityResult multiplicity(const Expr& f, const Interval& candidate, const Config& cfg) {
    MultiplicityResult out;
    Expr fn = normalize(f);
    RootCtx ctx(cfg, fn);
    Rational a = candidate.lo().to_rational(), b = candidate.hi().to_rational();
    a = std::max(a, Rational(0));
    b = std::min(b, Rational(1));
    // exact rational zero in the candidate
    Rational q = simplest_rational_in(a, b);
    if (ctx.sign(0, q) == Sign::Zero) {
        if (auto cz = exact_climb(ctx, 0, q)) {
            out.decided = true;
            out.m = cz->first.mult;
            Seg e = cz->second;
            out.enclosure = seg_iv(e, 128);
            Interval ev = eval_box(ctx, out.m, e, cfg.precision_start);
            out.fm_sign = ev.sign();
            return out;
        }
        return out;  // an exact zero whose chain cannot be certified
    }
    // simple-zero certificate by interval Newton
    for (int p : ctx.ladder) {
        Interval N;
        NewtonOutcome oc = newton_step(ctx, 0, seg_iv(Seg{a, b}, p), p, N);
        if (oc == NewtonOutcome::Unique) {
            Interval R = newton_refine(ctx, 0, N, cfg.tolerance);
            out.decided = true;
            out.m = 1;
            out.enclosure = R;
            Interval dvi =
                eval_box(ctx, 1, Seg{R.lo().to_rational(), R.hi().to_rational()}, p);
            out.fm_sign = dvi.is_entire() ? 0 : dvi.sign();
            return out;
        }
    }
    // fallback: least m with f^(m) bounded away from 0 on the candidate;
    // without an exact point only m = 1 zeros can also be certified to exist
    Seg s{a, b};
    for (int m = 1; m <= cfg.mult_cap; ++m) {
        bool away = false;
        for (int p : ctx.ladder) {
            Interval ev = eval_box(ctx, m, s, p);
            if (!ev.contains_zero() && !ev.is_entire()) {
                away = true;
                out.fm_sign = ev.sign();
                break;
            }
        }
        if (!away) continue;
        if (m == 1) {
            Sign sa = ctx.sign(0, a), sb = ctx.sign(0, b);
            if (sa != Sign::Unknown && sb != Sign::Unknown && sa != sb) {
                auto cz = monotone_zero(ctx, 0, a, b, sa);
                if (cz) {
                    out.decided = true;
                    out.m = 1;
                    out.enclosure = cz->point.is_exact()
                                        ? Interval::of_rational(cz->point.value(), 128)
                                        : cz->point.interval();
                    return out;
                }
            }
        }
        return out;  // m found but existence at depth m-1 not certifiable
    }
    return out;
}

Point refine(const Point& p, const Expr& f, const Rational& target, const Config& cfg) {
    if (p.is_exact()) return p;
    if (target < Rational(mpz_class(1), mpz_class(1) << cfg.precision_cap))
        throw PrecisionExhausted();
    Expr fn = normalize(f);
    RootCtx ctx(cfg, fn);
    int m = std::max(1, p.deriv_order());
    // a multiplicity-m zero of f is a simple zero of f^(m-1)
    Interval r = newton_refine(ctx, m - 1, p.interval(), target);
    if (exact_width(r) > target) {
        // bisection on the recorded derivative sign as a fallback
        Rational a = r.lo().to_rational(), b = r.hi().to_rational();
        Sign sa = ctx.sign(m - 1, a);
        while (b - a > target) {
            Rational mid = (a + b) / 2;
            Sign sm = ctx.sign(m - 1, mid);
            if (sm == Sign::Zero) {
                Rational rad = std::min(Rational(target / 2), Rational((b - a) / 64));
                a = std::max(a, Rational(mid - rad));
                b = std::min(b, Rational(mid + rad));
                break;
            }
            if (sm == Sign::Unknown) break;
            if (sm == sa)
                a = mid;
            else
                b = mid;
        }
        r = seg_iv(Seg{a, b}, std::max(128, dyadic_prec(target)));
    }
    return Point::enclosure(r, p.deriv_order(), p.deriv_sign(),
                            p.owner().empty() ? fn : p.owner());
}

}  // namespace anaring
