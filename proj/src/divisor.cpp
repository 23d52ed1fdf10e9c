#include "anaring/divisor.hpp"

#include <algorithm>
#include <stdexcept>

namespace anaring {

Point Point::rational(Rational q) {
    Point p;
    p.exact_ = true;
    p.q_ = std::move(q);
    return p;
}

Point Point::enclosure(Interval iv, int deriv_order, int deriv_sign, Expr owner) {
    Point p;
    p.exact_ = false;
    p.iv_ = std::move(iv);
    p.deriv_order_ = deriv_order;
    p.deriv_sign_ = deriv_sign;
    p.owner_ = std::move(owner);
    return p;
}

Rational Point::lower() const { return exact_ ? q_ : iv_.lo().to_rational(); }

Rational Point::upper() const { return exact_ ? q_ : iv_.hi().to_rational(); }

bool Point::overlaps(const Point& o) const {
    return !(upper() < o.lower() || o.upper() < lower());
}

Divisor::Divisor(std::vector<DivisorEntry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), [](const DivisorEntry& a, const DivisorEntry& b) {
        return a.point.lower() < b.point.lower();
    });
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
        const Point& a = entries_[i].point;
        const Point& b = entries_[i + 1].point;
        if (a.is_exact() && b.is_exact()) {
            if (a.value() == b.value()) throw std::logic_error("duplicate exact divisor point");
        } else if (a.is_exact() != b.is_exact()) {
            const Point& ex = a.is_exact() ? a : b;
            const Point& en = a.is_exact() ? b : a;
            if (en.interval().lo().cmp_rational(ex.value()) < 0 &&
                en.interval().hi().cmp_rational(ex.value()) > 0)
                throw std::logic_error("divisor enclosure contains an exact point");
        } else {
            if (b.lower() < a.upper()) throw std::logic_error("divisor enclosures overlap");
        }
    }
}

int Divisor::total_multiplicity() const {
    int t = 0;
    for (const auto& e : entries_) t += e.multiplicity;
    return t;
}

}  // namespace anaring
