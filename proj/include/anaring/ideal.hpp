// The principal-ideal algebra of the analytic-function ring on [0,1],
// represented through divisors: every ideal is either Zero or generated by a
// single function, and the generator's zero multiset determines the ideal.
// Sums, products, intersections and quotients are pointwise multiplicity
// algebra (min / add / max / clamped difference).
#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "anaring/config.hpp"
#include "anaring/divisor.hpp"
#include "anaring/expr.hpp"
#include "anaring/interval.hpp"

namespace anaring {

enum class Tribool { Yes, No, Unknown };

class Ideal {
  public:
    Ideal() = default;  // unit ideal

    static Ideal zero();
    static Ideal unit();
    static Ideal principal(Divisor d, std::optional<Expr> generator = std::nullopt);

    bool is_zero() const { return zero_; }
    bool is_unit() const { return !zero_ && divisor_.empty(); }
    const Divisor& divisor() const { return divisor_; }
    const std::optional<Expr>& generator() const { return generator_; }

  private:
    bool zero_ = false;
    Divisor divisor_;
    std::optional<Expr> generator_;
};

struct FromGeneratorResult {
    bool decided = false;
    Ideal ideal;
    Interval unresolved;
};

// Zero for the zero function, Principal(divisor, f) otherwise; undecided when
// isolation is. Throws NotAnalyticError.
FromGeneratorResult from_generator(const Expr& f, const Config& cfg);

// f in I iff div(I) <= div(f) pointwise (and 0 belongs to every ideal).
Tribool membership(const Expr& f, const Ideal& I, const Config& cfg);

// gcd / product / lcm / colon. All throw PointIdentityUndecidable when two
// divisor points can be neither merged nor separated at the refinement
// ladder's end; quotient throws ZeroDivisorArgument for J = Zero.
Ideal sum(const Ideal& I, const Ideal& J, const Config& cfg);
Ideal product(const Ideal& I, const Ideal& J, const Config& cfg);
Ideal intersect(const Ideal& I, const Ideal& J, const Config& cfg);
Ideal quotient(const Ideal& I, const Ideal& J, const Config& cfg);

// Maximal ideals are exactly the one-point multiplicity-1 divisors.
bool is_maximal(const Ideal& I);
// Zero is prime; the nonzero primes are the maximal ideals.
bool is_prime(const Ideal& I);

struct MaximalFactor {
    Point point;
    int exponent = 1;
};

// The divisor read as a product of maximal-ideal powers; [] for the unit
// ideal. Throws ZeroIdealNotFactorable.
std::vector<MaximalFactor> factor_maximals(const Ideal& I);

Ideal radical(const Ideal& I);

struct Unrepresentable {
    std::vector<MaximalFactor> factors;
};

// The monic polynomial generator when every point is rational; otherwise the
// factor list with enclosure points.
std::variant<Expr, Unrepresentable> canonical_generator(const Ideal& I);

Tribool ideal_equals(const Ideal& I, const Ideal& J, const Config& cfg);

}  // namespace anaring
