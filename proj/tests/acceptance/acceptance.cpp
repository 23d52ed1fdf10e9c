// Acceptance battery: one line per criterion, nonzero exit if any fails.
// Every tolerance is pinned here, in code.
#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "anaring/exact.hpp"
#include "anaring/ideal.hpp"
#include "anaring/ratpoly.hpp"
#include "anaring/roots.hpp"
#include "anaring/taylor.hpp"
#include "../unit/support.hpp"

using namespace anaring;
using testgen::Rng;

namespace {

const Config kCfg;
int g_failures = 0;
std::string g_cli_path;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int n, bool pass, const std::string& detail) {
    std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << " — " << detail << "\n";
    if (!pass) ++g_failures;
}

// Taylor coefficients of q around gamma via synthetic division, exact.
std::vector<Rational> taylor_shift(const RatPoly& q, const Rational& gamma) {
    std::vector<Rational> out;
    RatPoly rem = q;
    for (int n = 0; n <= q.degree(); ++n) {
        auto dm = poly_divmod(rem, RatPoly::linear_root(gamma));
        out.push_back(dm.second.is_zero() ? Rational(0) : dm.second[0]);
        rem = dm.first;
    }
    return out;
}

// --- criterion 1: deflation reconstructs the exact quotient --------------

void criterion1() {
    Timer timer;
    Rng rng(10001);
    int ok = 0;
    const int N = 200;
    for (int i = 0; i < N; ++i) {
        Rational gamma = rng.unit_rational(20);
        // random polynomial of degree <= 8 with gamma planted
        RatPoly f = RatPoly::linear_root(gamma) * testgen::random_poly(rng, 7);
        Expr fe = testgen::poly_to_expr(f);
        auto coeffs = exact_taylor(fe, gamma, f.degree());
        if (!coeffs) continue;
        auto defl = deflate_exact(*coeffs);
        RatPoly q = poly_divmod(f, RatPoly::linear_root(gamma)).first;
        std::vector<Rational> expect = taylor_shift(q, gamma);
        expect.resize(defl.size(), Rational(0));
        bool same = true;
        for (std::size_t n = 0; n < defl.size(); ++n)
            if (defl[n] != expect[n]) same = false;
        if (same) ++ok;
    }
    double secs = timer.seconds();
    report(1, ok == N && secs < 10.0,
           "coefficient-shift deflation: " + std::to_string(ok) + "/" + std::to_string(N) +
               " exact quotient matches in " + std::to_string(secs) + "s (budget 10s)");
}

// --- criterion 2: maximality of <x - gamma> ------------------------------

void criterion2() {
    Rng rng(10002);
    int gamma_ok = 0, member_ok = 0;
    const int NG = 100, NF = 20;
    for (int i = 0; i < NG; ++i) {
        Rational gamma = rng.unit_rational(30);
        Expr g = Expr::sub(Expr::var(), Expr::constant(gamma));
        auto ideal = from_generator(g, kCfg);
        if (ideal.decided && is_maximal(ideal.ideal)) ++gamma_ok;
        for (int j = 0; j < NF; ++j) {
            RatPoly f = testgen::random_poly(rng, 8);
            Rational fg = f.eval(gamma);
            Expr shifted = Expr::sub(testgen::poly_to_expr(f), Expr::constant(fg));
            if (ideal.decided && membership(shifted, ideal.ideal, kCfg) == Tribool::Yes)
                ++member_ok;
        }
    }
    report(2, gamma_ok == NG && member_ok == NG * NF,
           "maximality: " + std::to_string(gamma_ok) + "/" + std::to_string(NG) +
               " maximal, f-f(g) membership " + std::to_string(member_ok) + "/" +
               std::to_string(NG * NF));
}

// --- shared corpus for criteria 3 and 8 ----------------------------------

Expr random_decidable_factor(Rng& rng, bool allow_transcendental) {
    // planted rational roots, multiplicity <= 2, optional zero-free factor
    std::vector<std::pair<Rational, int>> roots;
    std::set<Rational> used;
    int k = 1 + rng.upto(1);
    for (int j = 0; j < k; ++j) {
        Rational q = rng.unit_rational(12);
        if (used.count(q)) continue;
        used.insert(q);
        roots.push_back({q, 1 + rng.upto(1)});
    }
    Expr e = testgen::poly_to_expr(testgen::planted_poly(rng, roots, rng.upto(1) == 0));
    if (allow_transcendental) {
        switch (rng.upto(3)) {
            case 0: e = Expr::mul(std::move(e), Expr::exp(Expr::var())); break;
            case 1: e = Expr::mul(std::move(e), Expr::cosh(Expr::var())); break;
            case 2:
                e = Expr::mul(std::move(e),
                              Expr::add(Expr::constant(2), Expr::sin(Expr::mul(Expr::pi(), Expr::var()))));
                break;
            default: break;  // polynomial only
        }
    }
    return e;
}

// --- criterion 3: integral-domain property -------------------------------

void criterion3() {
    Rng rng(10003);
    int ok = 0, zero_hits = 0;
    const int N = 200;
    for (int i = 0; i < N; ++i) {
        Expr f = random_decidable_factor(rng, true);
        Expr g = random_decidable_factor(rng, true);
        auto rf = from_generator(f, kCfg);
        auto rg = from_generator(g, kCfg);
        auto rfg = from_generator(Expr::mul(f, g), kCfg);
        if (!rf.decided || !rg.decided || !rfg.decided) continue;
        if (rfg.ideal.is_zero()) {
            ++zero_hits;
            continue;
        }
        Ideal prod = product(rf.ideal, rg.ideal, kCfg);
        if (ideal_equals(rfg.ideal, prod, kCfg) == Tribool::Yes) ++ok;
    }
    report(3, ok == N && zero_hits == 0,
           "integral domain: " + std::to_string(ok) + "/" + std::to_string(N) +
               " products match, " + std::to_string(zero_hits) + " spurious zero ideals");
}

// --- criterion 4: PID factorization --------------------------------------

void criterion4() {
    Rng rng(10004);
    int ok = 0;
    const int N = 200;
    for (int i = 0; i < N; ++i) {
        std::vector<std::pair<Rational, int>> roots;
        std::set<Rational> used;
        int budget = 1 + rng.upto(7);
        while (budget > 0) {
            Rational q = rng.unit_rational(16);
            if (used.count(q)) break;
            used.insert(q);
            int m = 1 + rng.upto(std::min(3, budget - 1));
            roots.push_back({q, m});
            budget -= m;
        }
        Expr gen = Expr::constant(1);
        bool first = true;
        for (const auto& [q, m] : roots) {
            Expr factor = normalize(Expr::sub(Expr::var(), Expr::constant(q)));
            if (m > 1) factor = Expr::ipow(std::move(factor), static_cast<unsigned>(m));
            gen = first ? std::move(factor) : Expr::mul(std::move(gen), std::move(factor));
            first = false;
        }
        auto r = from_generator(gen, kCfg);
        if (!r.decided || r.ideal.is_zero()) continue;
        auto fs = factor_maximals(r.ideal);
        std::sort(roots.begin(), roots.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        bool same = fs.size() == roots.size();
        for (std::size_t k = 0; same && k < fs.size(); ++k)
            same = fs[k].point.is_exact() && fs[k].point.value() == roots[k].first &&
                   fs[k].exponent == roots[k].second;
        auto cg = canonical_generator(r.ideal);
        bool round = false;
        if (std::holds_alternative<Expr>(cg)) {
            auto r2 = from_generator(std::get<Expr>(cg), kCfg);
            round = r2.decided && ideal_equals(r2.ideal, r.ideal, kCfg) == Tribool::Yes;
        }
        if (same && round) ++ok;
    }
    report(4, ok == N,
           "PID factorization: " + std::to_string(ok) + "/" + std::to_string(N) +
               " planted multisets recovered with generator round-trip");
}

// --- criterion 5: root isolation vs the exact oracle ----------------------

// refine an oracle isolating interval by sign bisection on the square-free part
void shrink_oracle_interval(const RatPoly& sqfree, Rational& lo, Rational& hi,
                            const Rational& target_width) {
    while (hi - lo > target_width) {
        Rational mid = (lo + hi) / 2;
        int sm = sgn(sqfree.eval(mid));
        if (sm == 0) {  // landed exactly: collapse tight around it
            Rational r = target_width / 4;
            lo = std::max(lo, Rational(mid - r));
            hi = std::min(hi, Rational(mid + r));
            return;
        }
        if (sgn(sqfree.eval(lo)) * sm < 0)
            hi = mid;
        else
            lo = mid;
    }
}

void criterion5() {
    Timer timer;
    Rng rng(10005);
    int ok = 0;
    const int N = 500;
    const Rational width_cap(mpz_class(1), mpz_class(1) << 53);
    for (int i = 0; i < N; ++i) {
        // mixed corpus: rational roots inside and outside, multiplicities,
        // complex-conjugate quadratics, an occasional irrational real pair
        RatPoly p = RatPoly::constant(testgen::frac(1 + rng.upto(3), 1 + rng.upto(2)));
        int deg_budget = 8;
        std::set<Rational> used;
        int planted = rng.upto(2);  // possibly no unit-interval roots at all
        for (int j = 0; j < planted && deg_budget > 0; ++j) {
            Rational q = rng.unit_rational(10);
            if (used.count(q)) continue;
            used.insert(q);
            int m = 1 + rng.upto(std::min(2, deg_budget - 1));
            for (int t = 0; t < m; ++t) p = p * RatPoly::linear_root(q);
            deg_budget -= m;
        }
        if (deg_budget >= 1 && rng.upto(1) == 0) {
            p = p * RatPoly::linear_root(Rational(5, 4) + rng.unit_rational(4));  // outside
            deg_budget -= 1;
        }
        if (deg_budget >= 2 && rng.upto(1) == 0) {
            // x^2 - q with q in (0,1) and sqrt(q) irrational
            Rational q = testgen::frac(1 + rng.upto(8), 11);
            p = p * RatPoly({-q, Rational(0), Rational(1)});
            deg_budget -= 2;
        }
        if (deg_budget >= 2 && rng.upto(1) == 0) {
            Rational b = rng.rational(2, 3);
            Rational c = b * b / 4 + testgen::frac(1 + rng.upto(3), 2);
            p = p * RatPoly({c, b, Rational(1)});  // complex pair
            deg_budget -= 2;
        }
        auto r = isolate_zeros(testgen::poly_to_expr(p), kCfg);
        if (r.kind != IsolateKind::Divisor) continue;
        auto oracle = exact_unit_interval_divisor(p);
        if (oracle.size() != r.divisor.size()) continue;
        RatPoly sqf = p.degree() >= 1 ? poly_divmod(p, poly_gcd(p, p.derivative())).first : p;
        bool all = true;
        for (std::size_t k = 0; k < oracle.size(); ++k) {
            const DivisorEntry& e = r.divisor[k];
            const OracleRoot& o = oracle[k];
            if (e.multiplicity != o.multiplicity) {
                all = false;
                break;
            }
            if (o.exact) {
                if (!(e.point.is_exact() && e.point.value() == o.value)) {
                    all = false;
                    break;
                }
                continue;  // exact point: width 0
            }
            if (e.point.is_exact()) {
                all = false;  // oracle says irrational, pipeline says rational
                break;
            }
            // enclosure width <= 2^-53 and containment of the (refined)
            // oracle isolating interval
            Rational w = e.point.upper() - e.point.lower();
            if (w > width_cap) {
                all = false;
                break;
            }
            Rational olo = o.lo, ohi = o.hi;
            Rational target = w / (mpz_class(1) << 20);
            const Rational floor_width(mpz_class(1), mpz_class(1) << 160);
            shrink_oracle_interval(sqf, olo, ohi, target);
            while (!(e.point.lower() <= olo && ohi <= e.point.upper()) && target > floor_width) {
                target /= mpz_class(1) << 20;
                shrink_oracle_interval(sqf, olo, ohi, target);
            }
            if (!(e.point.lower() <= olo && ohi <= e.point.upper())) {
                all = false;
                break;
            }
        }
        if (all) ++ok;
    }
    double secs = timer.seconds();
    report(5, ok == N && secs < 60.0,
           "root isolation vs oracle: " + std::to_string(ok) + "/" + std::to_string(N) +
               " full agreement in " + std::to_string(secs) + "s (budget 60s)");
}

// --- criterion 6: transcendental spot checks ------------------------------

Rational ln2_newton(int prec) {
    mpfr_t x, e;
    mpfr_init2(x, prec);
    mpfr_init2(e, prec);
    mpfr_set_d(x, 0.7, MPFR_RNDN);
    for (int i = 0; i < 64; ++i) {
        mpfr_neg(e, x, MPFR_RNDN);
        mpfr_exp(e, e, MPFR_RNDN);
        mpfr_mul_ui(e, e, 2, MPFR_RNDN);
        mpfr_sub_ui(x, x, 1, MPFR_RNDN);
        mpfr_add(x, x, e, MPFR_RNDN);
    }
    mpq_class out;
    mpfr_get_q(out.get_mpq_t(), x);
    mpfr_clear(x);
    mpfr_clear(e);
    return out;
}

void criterion6() {
    bool ok = true;
    std::string detail;

    auto rs = isolate_zeros(parse("sin(pi*x)"), kCfg);
    bool sin_ok = rs.kind == IsolateKind::Divisor && rs.divisor.size() == 2 &&
                  rs.divisor[0].point.is_exact() && rs.divisor[0].point.value() == 0 &&
                  rs.divisor[0].multiplicity == 1 && rs.divisor[1].point.is_exact() &&
                  rs.divisor[1].point.value() == 1 && rs.divisor[1].multiplicity == 1;
    if (!sin_ok) detail += " sin(pi*x) divisor wrong;";
    ok = ok && sin_ok;

    auto rl = isolate_zeros(parse("exp(x) - 2"), kCfg);
    bool ln_ok = rl.kind == IsolateKind::Divisor && rl.divisor.size() == 1 &&
                 !rl.divisor[0].point.is_exact() && rl.divisor[0].multiplicity == 1;
    if (ln_ok) {
        Rational l2 = ln2_newton(256);
        Rational tol(1, 1000000000);  // 1e-9
        ln_ok = rl.divisor[0].point.lower() >= l2 - tol &&
                rl.divisor[0].point.upper() <= l2 + tol &&
                rl.divisor[0].point.interval().contains(l2);
    }
    if (!ln_ok) detail += " exp(x)-2 enclosure wrong;";
    ok = ok && ln_ok;

    auto re = isolate_zeros(parse("exp(x)"), kCfg);
    bool exp_ok = re.kind == IsolateKind::Divisor && re.divisor.empty();
    if (!exp_ok) detail += " exp(x) should have an empty divisor;";
    ok = ok && exp_ok;

    report(6, ok, detail.empty() ? "transcendental spot checks (sin(pi*x), exp(x)-2, exp(x))"
                                 : detail);
}

// --- criterion 7: lattice and PID identities -------------------------------

Ideal random_ideal(Rng& rng, const std::vector<Rational>& pool) {
    std::vector<DivisorEntry> es;
    std::set<std::size_t> used;
    int n = rng.upto(4);
    for (int i = 0; i < n; ++i) {
        std::size_t k = static_cast<std::size_t>(rng.upto(static_cast<int>(pool.size()) - 1));
        if (used.count(k)) continue;
        used.insert(k);
        es.push_back({Point::rational(pool[k]), 1 + rng.upto(3)});
    }
    return Ideal::principal(Divisor(std::move(es)));
}

void criterion7() {
    Rng rng(10007);
    std::vector<Rational> pool;
    for (int i = 0; i < 10; ++i) pool.push_back(rng.unit_rational(29));
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    int ok = 0;
    const int N = 1000;
    auto yes = [&](const Ideal& a, const Ideal& b) {
        return ideal_equals(a, b, kCfg) == Tribool::Yes;
    };
    for (int i = 0; i < N; ++i) {
        Ideal a = random_ideal(rng, pool);
        Ideal b = random_ideal(rng, pool);
        Ideal c = random_ideal(rng, pool);
        bool pass = yes(sum(a, b, kCfg), sum(b, a, kCfg)) &&
                    yes(intersect(a, b, kCfg), intersect(b, a, kCfg)) &&
                    yes(sum(sum(a, b, kCfg), c, kCfg), sum(a, sum(b, c, kCfg), kCfg)) &&
                    yes(intersect(intersect(a, b, kCfg), c, kCfg),
                        intersect(a, intersect(b, c, kCfg), kCfg)) &&
                    yes(sum(a, a, kCfg), a) && yes(intersect(a, a, kCfg), a) &&
                    yes(sum(a, intersect(a, b, kCfg), kCfg), a) &&
                    yes(intersect(a, sum(a, b, kCfg), kCfg), a) &&
                    yes(product(sum(a, b, kCfg), intersect(a, b, kCfg), kCfg),
                        product(a, b, kCfg));
        if (pass) ++ok;
    }
    report(7, ok == N,
           "lattice/PID identities: " + std::to_string(ok) + "/" + std::to_string(N) +
               " ideal pairs satisfy all laws exactly");
}

// --- criterion 8: rigor guard ----------------------------------------------

void criterion8() {
    Rng rng(10008);
    bool ok = true;
    std::string detail;
    int tested = 0;
    for (int i = 0; i < 120; ++i) {
        Expr e = normalize(testgen::random_expr(rng, 3));
        if (e.is_zero()) continue;
        IsolateResult r;
        try {
            r = isolate_zeros(e, kCfg);
        } catch (const NotAnalyticError&) {
            continue;
        }
        ++tested;
        if (r.kind == IsolateKind::ZeroFunction) {
            ok = false;
            detail += " false ZeroFunction on " + serialize(e) + ";";
        }
    }
    auto rid = isolate_zeros(parse("sin(x)^2 + cos(x)^2 - 1"), kCfg);
    if (rid.kind != IsolateKind::Undecidable) {
        ok = false;
        detail += " sin^2+cos^2-1 must be Undecidable;";
    }
    if (!g_cli_path.empty()) {
        std::string cmd = "\"" + g_cli_path + "\" roots \"sin(x)^2+cos(x)^2-1\" >/dev/null 2>&1";
        int rc = std::system(cmd.c_str());
        int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
        if (code != 4) {
            ok = false;
            detail += " CLI exit code " + std::to_string(code) + " != 4;";
        }
    }
    report(8, ok,
           detail.empty() ? "rigor guard: no false ZeroFunction over " + std::to_string(tested) +
                                " nonzero inputs; hidden identity Undecidable (exit 4)"
                          : detail);
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--cli" && i + 1 < argc) g_cli_path = argv[i + 1];
        if (a.size() == 1 && a[0] >= '1' && a[0] <= '8') only.insert(a[0] - '0');
    }
    auto want = [&](int n) { return only.empty() || only.count(n); };
    if (want(1))
    criterion1();
    if (want(2)) criterion2();
    if (want(3)) criterion3();
    if (want(4)) criterion4();
    if (want(5)) criterion5();
    if (want(6)) criterion6();
    if (want(7)) criterion7();
    if (want(8)) criterion8();
    if (g_failures == 0)
        std::cout << "all acceptance criteria passed\n";
    else
        std::cout << g_failures << " criterion(s) failed\n";
    return g_failures == 0 ? 0 : 1;
}
