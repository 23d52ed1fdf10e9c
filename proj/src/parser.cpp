// Recursive-descent parser and the canonical printer for the expression
// grammar. The lexer munches "p/q" and "p.ddd" as single number tokens;
// the printer keeps '/' spaced so division chains never re-lex as literals.
#include <cctype>
#include <sstream>

#include "anaring/expr.hpp"

namespace anaring {

SyntaxError::SyntaxError(std::size_t off, std::vector<std::string> exp, std::string fnd)
    : Error([&] {
          std::ostringstream os;
          os << "syntax error at byte " << off << ": found " << fnd << ", expected ";
          for (std::size_t i = 0; i < exp.size(); ++i) os << (i ? "|" : "") << exp[i];
          return os.str();
      }()),
      offset(off),
      expected(std::move(exp)),
      found(std::move(fnd)) {}

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t offset;
    Rational value;     // Number
    std::string name;   // Name
    std::string text;   // for diagnostics
};

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;

    explicit Lexer(const std::string& s) : src(s) {}

    [[noreturn]] void fail(std::size_t off, std::vector<std::string> expected, std::string found) {
        throw SyntaxError(off, std::move(expected), std::move(found));
    }

    Token next() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
        std::size_t off = pos;
        if (pos >= src.size()) return {Tok::End, off, Rational(0), "", "end of input"};
        char c = src[pos];
        switch (c) {
            case '+': ++pos; return {Tok::Plus, off, Rational(0), "", "'+'"};
            case '-': ++pos; return {Tok::Minus, off, Rational(0), "", "'-'"};
            case '*': ++pos; return {Tok::Star, off, Rational(0), "", "'*'"};
            case '/': ++pos; return {Tok::Slash, off, Rational(0), "", "'/'"};
            case '^': ++pos; return {Tok::Caret, off, Rational(0), "", "'^'"};
            case '(': ++pos; return {Tok::LParen, off, Rational(0), "", "'('"};
            case ')': ++pos; return {Tok::RParen, off, Rational(0), "", "')'"};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(off);
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
            std::string name = src.substr(start, pos - start);
            return {Tok::Name, off, Rational(0), name, "'" + name + "'"};
        }
        fail(off, {"number", "name", "operator", "'('"}, std::string("'") + c + "'");
    }

    std::string digits() {
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        return src.substr(start, pos - start);
    }

    Token lex_number(std::size_t off) {
        std::string ip = digits();
        if (pos < src.size() && src[pos] == '.') {
            ++pos;
            if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
                fail(pos, {"digit"}, pos < src.size() ? std::string("'") + src[pos] + "'"
                                                      : "end of input");
            std::string fp = digits();
            return {Tok::Number, off, rational_from_decimal(ip, fp), "", ip + "." + fp};
        }
        // maximal munch: INT immediately followed by '/' DIGITS is one rational
        if (pos + 1 < src.size() && src[pos] == '/' &&
            std::isdigit(static_cast<unsigned char>(src[pos + 1]))) {
            ++pos;
            std::string dp = digits();
            mpz_class den(dp);
            if (den == 0) fail(off, {"nonzero denominator"}, ip + "/" + dp);
            Rational q(mpz_class(ip), den);
            q.canonicalize();
            return {Tok::Number, off, q, "", ip + "/" + dp};
        }
        return {Tok::Number, off, Rational(mpz_class(ip)), "", ip};
    }
};

struct Parser {
    Lexer lex;
    Token tok;

    explicit Parser(const std::string& s) : lex(s) { tok = lex.next(); }

    void advance() { tok = lex.next(); }

    [[noreturn]] void fail(std::vector<std::string> expected) {
        throw SyntaxError(tok.offset, std::move(expected), tok.text);
    }

    Expr parse_expr() {
        Expr e = parse_term();
        while (tok.kind == Tok::Plus || tok.kind == Tok::Minus) {
            bool plus = tok.kind == Tok::Plus;
            advance();
            Expr rhs = parse_term();
            e = plus ? Expr::add(std::move(e), std::move(rhs))
                     : Expr::sub(std::move(e), std::move(rhs));
        }
        return e;
    }

    Expr parse_term() {
        Expr e = parse_factor();
        while (tok.kind == Tok::Star || tok.kind == Tok::Slash) {
            bool star = tok.kind == Tok::Star;
            advance();
            Expr rhs = parse_factor();
            e = star ? Expr::mul(std::move(e), std::move(rhs))
                     : Expr::div(std::move(e), std::move(rhs));
        }
        return e;
    }

    Expr parse_factor() {
        if (tok.kind == Tok::Minus) {
            advance();
            return Expr::neg(parse_factor());
        }
        Expr base = parse_atom();
        if (tok.kind == Tok::Caret) {
            advance();
            if (tok.kind != Tok::Number || tok.value.get_den() != 1 || sgn(tok.value) < 0)
                fail({"nonnegative integer exponent"});
            if (tok.value.get_num() > 1000000) fail({"exponent <= 1000000"});
            unsigned n = static_cast<unsigned>(tok.value.get_num().get_ui());
            advance();
            if (tok.kind == Tok::Caret) fail({"'^' is non-associative; parenthesize"});
            return Expr::ipow(std::move(base), n);
        }
        return base;
    }

    Expr parse_atom() {
        switch (tok.kind) {
            case Tok::Number: {
                Expr e = Expr::constant(tok.value);
                advance();
                return e;
            }
            case Tok::Name: {
                std::string name = tok.name;
                if (name == "pi") {
                    advance();
                    return Expr::pi();
                }
                if (name == "x") {
                    advance();
                    return Expr::var();
                }
                if (name == "exp" || name == "sin" || name == "cos" || name == "sinh" ||
                    name == "cosh") {
                    advance();
                    if (tok.kind != Tok::LParen) fail({"'('"});
                    advance();
                    Expr arg = parse_expr();
                    if (tok.kind != Tok::RParen) fail({"')'"});
                    advance();
                    if (name == "exp") return Expr::exp(std::move(arg));
                    if (name == "sin") return Expr::sin(std::move(arg));
                    if (name == "cos") return Expr::cos(std::move(arg));
                    if (name == "sinh") return Expr::sinh(std::move(arg));
                    return Expr::cosh(std::move(arg));
                }
                fail({"'pi'", "'x'", "'exp'", "'sin'", "'cos'", "'sinh'", "'cosh'"});
            }
            case Tok::LParen: {
                advance();
                Expr e = parse_expr();
                if (tok.kind != Tok::RParen) fail({"')'"});
                advance();
                return e;
            }
            default:
                fail({"number", "'pi'", "'x'", "function", "'('", "'-'"});
        }
    }
};

}  // namespace

Expr parse(const std::string& text) {
    Parser p(text);
    Expr e = p.parse_expr();
    if (p.tok.kind != Tok::End)
        p.fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
    return e;
}

namespace {

// Precedence for printing: Add/Sub 1, Mul/Div 2, Neg 3, IntPow 4, atoms 5.
int prec_of(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::Add:
        case ExprKind::Sub:
            return 1;
        case ExprKind::Mul:
        case ExprKind::Div:
            return 2;
        case ExprKind::Neg:
            return 3;
        case ExprKind::IntPow:
            return 4;
        default:
            return 5;
    }
}

void print(std::ostringstream& os, const Expr& e, int min_prec) {
    int p = prec_of(e);
    bool parens = p < min_prec;
    if (parens) os << "(";
    switch (e.kind()) {
        case ExprKind::Const:
            os << to_string(e.value());
            break;
        case ExprKind::PiConst:
            os << "pi";
            break;
        case ExprKind::Var:
            os << "x";
            break;
        case ExprKind::Neg:
            os << "-";
            print(os, e.child(), 3);
            break;
        case ExprKind::Add:
            print(os, e.left(), 1);
            os << " + ";
            print(os, e.right(), 2);
            break;
        case ExprKind::Sub:
            print(os, e.left(), 1);
            os << " - ";
            print(os, e.right(), 2);
            break;
        case ExprKind::Mul:
            print(os, e.left(), 2);
            os << "*";
            print(os, e.right(), 3);
            break;
        case ExprKind::Div:
            print(os, e.left(), 2);
            os << " / ";
            print(os, e.right(), 3);
            break;
        case ExprKind::IntPow:
            print(os, e.child(), 5);
            os << "^" << e.exponent();
            break;
        case ExprKind::Exp:
        case ExprKind::Sin:
        case ExprKind::Cos:
        case ExprKind::Sinh:
        case ExprKind::Cosh: {
            const char* name = e.kind() == ExprKind::Exp    ? "exp"
                               : e.kind() == ExprKind::Sin  ? "sin"
                               : e.kind() == ExprKind::Cos  ? "cos"
                               : e.kind() == ExprKind::Sinh ? "sinh"
                                                            : "cosh";
            os << name << "(";
            print(os, e.child(), 0);
            os << ")";
            break;
        }
    }
    if (parens) os << ")";
}

}  // namespace

std::string serialize(const Expr& f) {
    std::ostringstream os;
    print(os, f, 0);
    return os.str();
}

}  // namespace anaring
