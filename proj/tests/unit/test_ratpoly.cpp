#include <doctest.h>

#include <set>

#include "anaring/ratpoly.hpp"
#include "support.hpp"

using namespace anaring;

namespace {

RatPoly P(std::initializer_list<long> nums, long den = 1) {
    std::vector<Rational> c;
    for (long n : nums) c.emplace_back(n, den);
    return RatPoly(std::move(c));
}

}  // namespace

TEST_CASE("poly_divmod worked examples") {
    auto [q1, r1] = poly_divmod(P({-1, 0, 1}), P({-1, 1}));  // (x^2-1)/(x-1)
    CHECK(q1 == P({1, 1}));
    CHECK(r1.is_zero());

    auto [q2, r2] = poly_divmod(P({0, 1}), P({0, 0, 1}));  // x / x^2
    CHECK(q2.is_zero());
    CHECK(r2 == P({0, 1}));

    auto [q3, r3] = poly_divmod(P({0, 0, 0, 1}), RatPoly::linear_root(Rational(1, 2)));
    CHECK(q3 == RatPoly({Rational(1, 4), Rational(1, 2), Rational(1)}));
    CHECK(r3 == RatPoly::constant(Rational(1, 8)));

    CHECK_THROWS_AS(poly_divmod(P({1}), RatPoly::zero()), DivisionByZeroPoly);
}

TEST_CASE("poly_divmod round-trips") {
    testgen::Rng rng(101);
    for (int i = 0; i < 200; ++i) {
        RatPoly a = testgen::random_poly(rng, 8);
        RatPoly b = testgen::random_poly(rng, 5);
        if (b.is_zero()) continue;
        auto [q, r] = poly_divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("poly_gcd worked examples") {
    RatPoly a = RatPoly::linear_root(Rational(1, 2)) * RatPoly::linear_root(Rational(1, 2));
    RatPoly b = RatPoly::linear_root(Rational(1, 2)) * RatPoly::linear_root(Rational(1, 3));
    CHECK(poly_gcd(a, b) == RatPoly::linear_root(Rational(1, 2)));

    testgen::Rng rng(1);
    CHECK(poly_gcd(testgen::random_poly(rng, 4), P({1})) == P({1}));

    CHECK(poly_gcd(P({-1, 0, 1}), P({0, -1, 1})) == P({-1, 1}));  // gcd(x^2-1, x^2-x) = x-1

    CHECK_THROWS_AS(poly_gcd(RatPoly::zero(), RatPoly::zero()), BothZero);
}

TEST_CASE("gcd divides both arguments and is divided by common divisors") {
    testgen::Rng rng(55);
    for (int i = 0; i < 100; ++i) {
        RatPoly c = testgen::random_poly(rng, 3);
        RatPoly a = testgen::random_poly(rng, 3) * c;
        RatPoly b = testgen::random_poly(rng, 3) * c;
        if (a.is_zero() && b.is_zero()) continue;
        RatPoly g = poly_gcd(a, b);
        if (!a.is_zero()) CHECK(poly_divmod(a, g).second.is_zero());
        if (!b.is_zero()) CHECK(poly_divmod(b, g).second.is_zero());
        if (!c.is_zero() && !a.is_zero() && !b.is_zero())
            CHECK(poly_divmod(g, poly_gcd(c, g)).second.is_zero());
    }
}

TEST_CASE("sturm_count worked examples") {
    RatPoly two_roots = RatPoly::linear_root(Rational(1, 4)) * RatPoly::linear_root(Rational(3, 4));
    CHECK(sturm_count(two_roots, Rational(0), Rational(1)) == 2);
    CHECK(sturm_count(P({1, 0, 1}), Rational(0), Rational(1)) == 0);  // x^2+1
    RatPoly dbl = RatPoly::linear_root(Rational(1, 2)) * RatPoly::linear_root(Rational(1, 2));
    CHECK(sturm_count(dbl, Rational(0), Rational(1)) == 1);  // distinct count
    // (lo, hi] convention: root at the left endpoint is excluded, at the right included
    CHECK(sturm_count(P({0, 1}), Rational(0), Rational(1)) == 0);
    CHECK(sturm_count(P({-1, 1}), Rational(0), Rational(1)) == 1);
}

TEST_CASE("sturm_count matches planted truth") {
    testgen::Rng rng(77);
    for (int i = 0; i < 120; ++i) {
        int k = rng.upto(4);
        std::vector<std::pair<Rational, int>> roots;
        std::set<Rational> used;
        for (int j = 0; j < k; ++j) {
            Rational q = rng.unit_rational(19);
            if (sgn(q) == 0 || q == 1 || used.count(q)) continue;
            used.insert(q);
            roots.push_back({q, 1});
        }
        RatPoly p = testgen::planted_poly(rng, roots, true);
        CHECK(sturm_count(p, Rational(0), Rational(1)) == static_cast<int>(roots.size()));
    }
}

TEST_CASE("squarefree_decompose worked examples") {
    RatPoly p1 = P({0, 1}) * RatPoly::linear_root(Rational(1, 2)) *
                 RatPoly::linear_root(Rational(1, 2));
    auto d1 = squarefree_decompose(p1);
    REQUIRE(d1.size() == 2);
    CHECK(d1[0].first == P({0, 1}));
    CHECK(d1[0].second == 1);
    CHECK(d1[1].first == RatPoly::linear_root(Rational(1, 2)));
    CHECK(d1[1].second == 2);

    auto d2 = squarefree_decompose(P({-1, 0, 1}));
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].first == P({-1, 0, 1}));
    CHECK(d2[0].second == 1);

    auto d3 = squarefree_decompose(P({0, 0, 0, 1}));  // x^3
    REQUIRE(d3.size() == 1);
    CHECK(d3[0].first == P({0, 1}));
    CHECK(d3[0].second == 3);
}

TEST_CASE("squarefree reconstruction up to a constant") {
    testgen::Rng rng(303);
    for (int i = 0; i < 80; ++i) {
        RatPoly a = testgen::random_poly(rng, 3);
        RatPoly b = testgen::random_poly(rng, 2);
        if (a.degree() < 1 || b.degree() < 1) continue;
        RatPoly p = a * b * b;
        auto d = squarefree_decompose(p);
        RatPoly prod = RatPoly::constant(Rational(1));
        for (const auto& [f, m] : d)
            for (int j = 0; j < m; ++j) prod = prod * f;
        CHECK(prod.monic() == p.monic());
    }
}

TEST_CASE("exact_unit_interval_divisor worked examples") {
    RatPoly p = RatPoly::linear_root(Rational(1, 2)) * RatPoly::linear_root(Rational(1, 2)) *
                RatPoly::linear_root(Rational(1, 4)) * RatPoly::linear_root(Rational(2));
    auto d = exact_unit_interval_divisor(p);
    REQUIRE(d.size() == 2);
    CHECK(d[0].exact);
    CHECK(d[0].value == Rational(1, 4));
    CHECK(d[0].multiplicity == 1);
    CHECK(d[1].exact);
    CHECK(d[1].value == Rational(1, 2));
    CHECK(d[1].multiplicity == 2);

    auto irr = exact_unit_interval_divisor(P({-1, 0, 2}));  // 2x^2 - 1
    REQUIRE(irr.size() == 1);
    CHECK(!irr[0].exact);
    CHECK(irr[0].multiplicity == 1);
    // contains sqrt(1/2) ~ 0.7071
    CHECK(irr[0].lo < Rational(7072, 10000));
    CHECK(irr[0].hi > Rational(7071, 10000));
    CHECK(irr[0].lo * irr[0].lo < Rational(1, 2));
    CHECK(irr[0].hi * irr[0].hi > Rational(1, 2));

    CHECK(exact_unit_interval_divisor(P({5})).empty());
}

TEST_CASE("endpoint roots are reported") {
    RatPoly p = P({0, 1}) * RatPoly::linear_root(Rational(1));  // x(x-1)
    auto d = exact_unit_interval_divisor(p);
    REQUIRE(d.size() == 2);
    CHECK(d[0].value == Rational(0));
    CHECK(d[1].value == Rational(1));
}

TEST_CASE("expr_to_ratpoly") {
    auto p = expr_to_ratpoly(parse("x^2 - 1"));
    REQUIRE(p.has_value());
    CHECK(*p == P({-1, 0, 1}));
    CHECK(!expr_to_ratpoly(parse("sin(x)")).has_value());
    CHECK(!expr_to_ratpoly(parse("pi*x")).has_value());
    auto q = expr_to_ratpoly(parse("(x^2 - 1) / 2"));
    REQUIRE(q.has_value());
    CHECK(*q == RatPoly({Rational(-1, 2), Rational(0), Rational(1, 2)}));
}
