// Exact rational polynomial arithmetic: the independent ground truth for
// property tests and the CLI's --oracle cross-check. No floating point here.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "anaring/expr.hpp"
#include "anaring/rational.hpp"

namespace anaring {

// Coefficients lowest degree first; zero polynomial is the empty vector.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);  // trims trailing zeros

    static RatPoly zero() { return RatPoly(); }
    static RatPoly constant(Rational q);
    static RatPoly x();
    // (x - r)
    static RatPoly linear_root(const Rational& r);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const { return c_.back(); }
    const Rational& operator[](std::size_t i) const { return c_[i]; }

    Rational eval(const Rational& at) const;
    RatPoly derivative() const;
    RatPoly monic() const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly operator-() const;
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    RatPoly scaled(const Rational& s) const;

  private:
    std::vector<Rational> c_;
};

// a = q*b + r with deg r < deg b. Throws DivisionByZeroPoly.
std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b);

// Monic gcd by the Euclidean algorithm. Throws BothZero.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

// Number of distinct real roots of p in (lo, hi]. p != 0.
int sturm_count(const RatPoly& p, const Rational& lo, const Rational& hi);

// Yun decomposition: list of (factor, multiplicity) with square-free pairwise
// coprime factors whose product to the stated powers is p up to a constant.
std::vector<std::pair<RatPoly, int>> squarefree_decompose(const RatPoly& p);

struct OracleRoot {
    bool exact = false;
    Rational value;        // exact case
    Rational lo, hi;       // isolating interval otherwise (lo < root < hi)
    int multiplicity = 1;
};

// Complete divisor of p on [0,1]: rational roots exactly, irrational roots as
// disjoint rational isolating intervals, each with its multiplicity.
std::vector<OracleRoot> exact_unit_interval_divisor(const RatPoly& p);

// Expr -> RatPoly for rational-closed polynomial expressions (constant
// divisors allowed); nullopt when the expression leaves that class.
std::optional<RatPoly> expr_to_ratpoly(const Expr& f);

}  // namespace anaring
