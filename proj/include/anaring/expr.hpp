// Closed-form analytic expressions on [0,1]: immutable ASTs over rationals,
// pi, x, field operations, integer powers and exp/sin/cos/sinh/cosh.
// The class is closed under differentiation.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "anaring/errors.hpp"
#include "anaring/rational.hpp"

namespace anaring {

enum class ExprKind {
    Const, PiConst, Var,
    Neg, Add, Sub, Mul, Div, IntPow,
    Exp, Sin, Cos, Sinh, Cosh,
};

bool is_unary(ExprKind k);
bool is_binary(ExprKind k);

class Expr;

struct ExprNode {
    ExprKind kind;
    Rational value;            // Const only
    unsigned exponent = 0;     // IntPow only
    std::vector<Expr> kids;    // 1 for unary/IntPow, 2 for binary
};

// Value handle; cheap to copy, structurally immutable.
class Expr {
  public:
    Expr() = default;  // empty handle; only produced by default construction

    static Expr constant(Rational q);
    static Expr constant(long n) { return constant(Rational(n)); }
    static Expr pi();
    static Expr var();
    static Expr neg(Expr e);
    static Expr add(Expr a, Expr b);
    static Expr sub(Expr a, Expr b);
    static Expr mul(Expr a, Expr b);
    static Expr div(Expr a, Expr b);
    static Expr ipow(Expr base, unsigned n);
    static Expr exp(Expr e);
    static Expr sin(Expr e);
    static Expr cos(Expr e);
    static Expr sinh(Expr e);
    static Expr cosh(Expr e);

    bool empty() const { return !node_; }
    ExprKind kind() const { return node_->kind; }
    const Rational& value() const { return node_->value; }
    unsigned exponent() const { return node_->exponent; }
    const Expr& child(std::size_t i = 0) const { return node_->kids[i]; }
    const Expr& left() const { return node_->kids[0]; }
    const Expr& right() const { return node_->kids[1]; }
    std::size_t arity() const { return node_->kids.size(); }

    bool is_const() const { return kind() == ExprKind::Const; }
    bool is_zero() const { return is_const() && sgn(value()) == 0; }
    bool is_one() const { return is_const() && value() == 1; }

    // Structural equality.
    bool same(const Expr& o) const;

    const ExprNode* id() const { return node_.get(); }

  private:
    explicit Expr(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const ExprNode> node_;
};

// Grammar (whitespace insignificant between tokens):
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := "-" factor | atom ("^" UINT)?
//   atom   := RATIONAL | DECIMAL | "pi" | "x" | FUNC "(" expr ")" | "(" expr ")"
// RATIONAL and DECIMAL are single tokens (maximal munch: "1/2" is a literal,
// "1 / 2" is a division). Throws SyntaxError.
Expr parse(const std::string& text);

// Canonical text; parse(serialize(f)) == f structurally for every AST that
// parse can produce.
std::string serialize(const Expr& f);

// Symbolic derivative (the class is closed under d/dx, quotients included).
Expr differentiate(const Expr& f);

// Exact constant folding and the identity rules; idempotent.
// Throws DivisionByZeroConstant when a constant denominator folds to 0.
Expr normalize(const Expr& f);

}  // namespace anaring
