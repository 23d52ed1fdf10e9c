// Points of [0,1] (exact rationals or certified isolating enclosures) and
// divisors: the finite zero multiset of a nonzero analytic function.
#pragma once

#include <optional>
#include <vector>

#include "anaring/expr.hpp"
#include "anaring/interval.hpp"
#include "anaring/rational.hpp"

namespace anaring {

// A zero location. Enclosures carry the uniqueness certificate produced by
// isolation: the m-th derivative of the certifying (owner) function has the
// recorded constant sign on the interval while lower derivatives vanish
// inside. The owner is what lets two enclosures be identified or separated
// later: each isolates exactly one zero of its owner.
class Point {
  public:
    static Point rational(Rational q);
    static Point enclosure(Interval iv, int deriv_order, int deriv_sign, Expr owner = Expr());

    bool is_exact() const { return exact_; }
    const Rational& value() const { return q_; }
    const Interval& interval() const { return iv_; }
    int deriv_order() const { return deriv_order_; }
    int deriv_sign() const { return deriv_sign_; }
    const Expr& owner() const { return owner_; }

    // Lower bound as an exact rational (enclosure endpoints are dyadic).
    Rational lower() const;
    Rational upper() const;

    bool overlaps(const Point& o) const;

  private:
    bool exact_ = true;
    Rational q_;
    Interval iv_;
    int deriv_order_ = 0;  // m in the certificate
    int deriv_sign_ = 0;   // sign of f^(m) on the interval
    Expr owner_;           // certifying function, when known
};

struct DivisorEntry {
    Point point;
    int multiplicity = 1;
};

// Sorted by lower endpoint; entries pairwise disjoint.
class Divisor {
  public:
    Divisor() = default;
    explicit Divisor(std::vector<DivisorEntry> entries);  // sorts, checks disjointness

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const DivisorEntry& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<DivisorEntry>& entries() const { return entries_; }

    int total_multiplicity() const;

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

  private:
    std::vector<DivisorEntry> entries_;
};

}  // namespace anaring
