#include "anaring/expr.hpp"

#include <cassert>

namespace anaring {

bool is_unary(ExprKind k) {
    switch (k) {
        case ExprKind::Neg:
        case ExprKind::IntPow:
        case ExprKind::Exp:
        case ExprKind::Sin:
        case ExprKind::Cos:
        case ExprKind::Sinh:
        case ExprKind::Cosh:
            return true;
        default:
            return false;
    }
}

bool is_binary(ExprKind k) {
    switch (k) {
        case ExprKind::Add:
        case ExprKind::Sub:
        case ExprKind::Mul:
        case ExprKind::Div:
            return true;
        default:
            return false;
    }
}

Expr Expr::constant(Rational q) {
    q.canonicalize();
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Const;
    n->value = std::move(q);
    return Expr(std::move(n));
}

Expr Expr::pi() {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::PiConst;
    return Expr(std::move(n));
}

Expr Expr::var() {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Var;
    return Expr(std::move(n));
}

Expr Expr::neg(Expr e) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Neg;
    n->kids.push_back(std::move(e));
    return Expr(std::move(n));
}

Expr Expr::add(Expr a, Expr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Add;
    n->kids.push_back(std::move(a));
    n->kids.push_back(std::move(b));
    return Expr(std::move(n));
}

Expr Expr::sub(Expr a, Expr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Sub;
    n->kids.push_back(std::move(a));
    n->kids.push_back(std::move(b));
    return Expr(std::move(n));
}

Expr Expr::mul(Expr a, Expr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Mul;
    n->kids.push_back(std::move(a));
    n->kids.push_back(std::move(b));
    return Expr(std::move(n));
}

Expr Expr::div(Expr a, Expr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Div;
    n->kids.push_back(std::move(a));
    n->kids.push_back(std::move(b));
    return Expr(std::move(n));
}

Expr Expr::ipow(Expr base, unsigned e) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::IntPow;
    n->exponent = e;
    n->kids.push_back(std::move(base));
    return Expr(std::move(n));
}

Expr Expr::exp(Expr e) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Exp;
    n->kids.push_back(std::move(e));
    return Expr(std::move(n));
}

Expr Expr::sin(Expr e) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Sin;
    n->kids.push_back(std::move(e));
    return Expr(std::move(n));
}

Expr Expr::cos(Expr e) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Cos;
    n->kids.push_back(std::move(e));
    return Expr(std::move(n));
}

Expr Expr::sinh(Expr e) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Sinh;
    n->kids.push_back(std::move(e));
    return Expr(std::move(n));
}

Expr Expr::cosh(Expr e) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Cosh;
    n->kids.push_back(std::move(e));
    return Expr(std::move(n));
}

bool Expr::same(const Expr& o) const {
    if (node_ == o.node_) return true;
    if (!node_ || !o.node_) return false;
    if (kind() != o.kind()) return false;
    switch (kind()) {
        case ExprKind::Const:
            return value() == o.value();
        case ExprKind::PiConst:
        case ExprKind::Var:
            return true;
        case ExprKind::IntPow:
            if (exponent() != o.exponent()) return false;
            break;
        default:
            break;
    }
    if (arity() != o.arity()) return false;
    for (std::size_t i = 0; i < arity(); ++i)
        if (!child(i).same(o.child(i))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// differentiate

Expr differentiate(const Expr& f) {
    using E = Expr;
    switch (f.kind()) {
        case ExprKind::Const:
        case ExprKind::PiConst:
            return E::constant(0);
        case ExprKind::Var:
            return E::constant(1);
        case ExprKind::Neg:
            return E::neg(differentiate(f.child()));
        case ExprKind::Add:
            return E::add(differentiate(f.left()), differentiate(f.right()));
        case ExprKind::Sub:
            return E::sub(differentiate(f.left()), differentiate(f.right()));
        case ExprKind::Mul:
            return E::add(E::mul(differentiate(f.left()), f.right()),
                          E::mul(f.left(), differentiate(f.right())));
        case ExprKind::Div: {
            const Expr& u = f.left();
            const Expr& v = f.right();
            // (u / w^k)' = (u'w - k u w') / w^(k+1); keeps quotient chains flat
            if (v.kind() == ExprKind::IntPow && v.exponent() >= 1) {
                const Expr& w = v.child();
                unsigned k = v.exponent();
                Expr num = E::sub(E::mul(differentiate(u), w),
                                  E::mul(E::constant(static_cast<long>(k)),
                                         E::mul(u, differentiate(w))));
                return E::div(std::move(num), E::ipow(w, k + 1));
            }
            Expr num = E::sub(E::mul(differentiate(u), v), E::mul(u, differentiate(v)));
            return E::div(std::move(num), E::ipow(v, 2));
        }
        case ExprKind::IntPow: {
            unsigned n = f.exponent();
            if (n == 0) return E::constant(0);
            const Expr& u = f.child();
            Expr coeff = E::mul(E::constant(static_cast<long>(n)), E::ipow(u, n - 1));
            return E::mul(std::move(coeff), differentiate(u));
        }
        case ExprKind::Exp:
            return E::mul(differentiate(f.child()), E::exp(f.child()));
        case ExprKind::Sin:
            return E::mul(differentiate(f.child()), E::cos(f.child()));
        case ExprKind::Cos:
            return E::mul(differentiate(f.child()), E::neg(E::sin(f.child())));
        case ExprKind::Sinh:
            return E::mul(differentiate(f.child()), E::cosh(f.child()));
        case ExprKind::Cosh:
            return E::mul(differentiate(f.child()), E::sinh(f.child()));
    }
    return Expr();
}

// ---------------------------------------------------------------------------
// normalize

namespace {

Expr norm(const Expr& f);

Expr norm_unary(ExprKind k, Expr a) {
    using E = Expr;
    if (a.is_const()) {
        const Rational& c = a.value();
        switch (k) {
            case ExprKind::Neg:
                return E::constant(-c);
            case ExprKind::Exp:
                if (sgn(c) == 0) return E::constant(1);
                break;
            case ExprKind::Sin:
            case ExprKind::Sinh:
                if (sgn(c) == 0) return E::constant(0);
                break;
            case ExprKind::Cos:
            case ExprKind::Cosh:
                if (sgn(c) == 0) return E::constant(1);
                break;
            default:
                break;
        }
    }
    if (k == ExprKind::Neg && a.kind() == ExprKind::Neg) return a.child();
    switch (k) {
        case ExprKind::Neg: return E::neg(std::move(a));
        case ExprKind::Exp: return E::exp(std::move(a));
        case ExprKind::Sin: return E::sin(std::move(a));
        case ExprKind::Cos: return E::cos(std::move(a));
        case ExprKind::Sinh: return E::sinh(std::move(a));
        case ExprKind::Cosh: return E::cosh(std::move(a));
        default: break;
    }
    assert(false);
    return a;
}

Expr norm(const Expr& f) {
    using E = Expr;
    switch (f.kind()) {
        case ExprKind::Const:
        case ExprKind::PiConst:
        case ExprKind::Var:
            return f;
        case ExprKind::Neg:
        case ExprKind::Exp:
        case ExprKind::Sin:
        case ExprKind::Cos:
        case ExprKind::Sinh:
        case ExprKind::Cosh:
            return norm_unary(f.kind(), norm(f.child()));
        case ExprKind::IntPow: {
            Expr b = norm(f.child());
            unsigned n = f.exponent();
            if (n == 0) return E::constant(1);
            if (n == 1) return b;
            if (b.is_const()) {
                Rational r(1);
                for (unsigned i = 0; i < n; ++i) r *= b.value();
                return E::constant(std::move(r));
            }
            return E::ipow(std::move(b), n);
        }
        case ExprKind::Add: {
            Expr a = norm(f.left()), b = norm(f.right());
            if (a.is_const() && b.is_const()) return E::constant(a.value() + b.value());
            if (a.is_zero()) return b;
            if (b.is_zero()) return a;
            return E::add(std::move(a), std::move(b));
        }
        case ExprKind::Sub: {
            Expr a = norm(f.left()), b = norm(f.right());
            if (a.is_const() && b.is_const()) return E::constant(a.value() - b.value());
            if (b.is_zero()) return a;
            if (a.is_zero()) return norm_unary(ExprKind::Neg, std::move(b));
            return E::sub(std::move(a), std::move(b));
        }
        case ExprKind::Mul: {
            Expr a = norm(f.left()), b = norm(f.right());
            if (a.is_zero() || b.is_zero()) return E::constant(0);
            if (a.is_const() && b.is_const()) return E::constant(a.value() * b.value());
            if (a.is_one()) return b;
            if (b.is_one()) return a;
            return E::mul(std::move(a), std::move(b));
        }
        case ExprKind::Div: {
            Expr a = norm(f.left()), b = norm(f.right());
            if (b.is_const()) {
                if (sgn(b.value()) == 0) throw DivisionByZeroConstant();
                if (a.is_const()) return E::constant(a.value() / b.value());
                if (b.is_one()) return a;
            }
            if (a.is_zero()) return E::constant(0);
            return E::div(std::move(a), std::move(b));
        }
    }
    return f;
}

}  // namespace

Expr normalize(const Expr& f) { return norm(f); }

}  // namespace anaring
