// Command-line front end: certified root isolation, Taylor deflation, point
// evaluation and the principal-ideal algebra, over standard streams.
//
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 not analytic, 4 undecidable,
// 5 point identity undecidable, 6 oracle mismatch.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "anaring/exact.hpp"
#include "anaring/ideal.hpp"
#include "anaring/json_io.hpp"
#include "anaring/ratpoly.hpp"
#include "anaring/roots.hpp"
#include "anaring/taylor.hpp"

namespace {

using namespace anaring;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotAnalytic = 3;
constexpr int kExitUndecidable = 4;
constexpr int kExitPointIdentity = 5;
constexpr int kExitOracleMismatch = 6;

struct Options {
    Config cfg;
    bool json_out = false;
    bool oracle = false;
    int digits = 17;
};

struct OracleMismatch {
    std::string what;
};

Rational parse_rational_arg(const std::string& s) {
    // accepts "p/q", integers, decimals and "2^-53"
    if (s.rfind("2^-", 0) == 0) {
        long k = std::stol(s.substr(3));
        return Rational(mpz_class(1), mpz_class(1) << k);
    }
    Expr e = normalize(parse(s));
    if (!e.is_const() && e.kind() == ExprKind::Neg && e.child().is_const())
        return -e.child().value();
    if (!e.is_const()) throw SyntaxError(0, {"rational number"}, s);
    return e.value();
}

std::string point_text(const Point& p, int digits) {
    if (p.is_exact()) {
        Dyadic d = Dyadic::from_rational(p.value(), 64, MPFR_RNDN);
        return to_string(p.value()) + " (~" + d.to_decimal(std::min(digits, 12), MPFR_RNDN) + ")";
    }
    std::ostringstream os;
    os << "[" << p.interval().lo().to_decimal(digits, MPFR_RNDD) << ", "
       << p.interval().hi().to_decimal(digits, MPFR_RNDU) << "] width "
       << p.interval().width(64).to_decimal(4, MPFR_RNDU);
    return os.str();
}

void print_divisor_text(const Divisor& d, const Options& opt) {
    if (d.empty()) {
        std::cout << "divisor: empty (unit ideal)\n";
        return;
    }
    std::cout << "divisor (" << d.size() << " point" << (d.size() > 1 ? "s" : "") << "):\n";
    for (const DivisorEntry& e : d)
        std::cout << "  " << point_text(e.point, opt.digits) << "  multiplicity " << e.multiplicity
                  << "\n";
}

// ---------------------------------------------------------------------------
// oracle cross-checks (--oracle, polynomial inputs only)

bool point_matches(const Point& p, const OracleRoot& o) {
    if (o.exact) {
        if (p.is_exact()) return p.value() == o.value;
        return p.interval().contains(o.value);
    }
    if (p.is_exact()) return o.lo < p.value() && p.value() < o.hi;
    // both intervals around the same root: they must overlap
    return !(p.upper() < o.lo || o.hi < p.lower());
}

void oracle_check_divisor(const Expr& f, const Divisor& d) {
    auto poly = expr_to_ratpoly(normalize(f));
    if (!poly || poly->is_zero()) return;
    auto oracle = exact_unit_interval_divisor(*poly);
    if (oracle.size() != d.size())
        throw OracleMismatch{"root count: pipeline " + std::to_string(d.size()) + ", oracle " +
                             std::to_string(oracle.size())};
    for (std::size_t i = 0; i < oracle.size(); ++i) {
        if (d[i].multiplicity != oracle[i].multiplicity)
            throw OracleMismatch{"multiplicity at point " + std::to_string(i)};
        if (!point_matches(d[i].point, oracle[i]))
            throw OracleMismatch{"location of point " + std::to_string(i)};
    }
}

void oracle_check_deflate(const Expr& f, const Rational& gamma,
                          const std::vector<Interval>& deflated) {
    auto poly = expr_to_ratpoly(normalize(f));
    if (!poly || poly->is_zero()) return;
    RatPoly q = poly_divmod(*poly, RatPoly::linear_root(gamma)).first;
    // Taylor coefficients of the quotient around gamma, by synthetic shifts
    std::vector<Rational> qt;
    RatPoly rem = q;
    for (int n = 0; n <= q.degree(); ++n) {
        auto dm = poly_divmod(rem, RatPoly::linear_root(gamma));
        qt.push_back(dm.second.is_zero() ? Rational(0) : dm.second[0]);
        rem = dm.first;
    }
    for (std::size_t n = 0; n < deflated.size(); ++n) {
        Rational expect = n < qt.size() ? qt[n] : Rational(0);
        if (!deflated[n].contains(expect))
            throw OracleMismatch{"deflated coefficient " + std::to_string(n) +
                                 " does not enclose the oracle quotient"};
    }
}

// ---------------------------------------------------------------------------
// commands

int cmd_roots(const std::string& text, const Options& opt) {
    Expr f = parse(text);
    IsolateResult r = isolate_zeros(f, opt.cfg);
    switch (r.kind) {
        case IsolateKind::ZeroFunction:
            if (opt.json_out)
                std::cout << json{{"zero_function", true}}.dump() << "\n";
            else
                std::cout << "zero function\n";
            return kExitOk;
        case IsolateKind::Undecidable:
            if (opt.json_out)
                std::cout << json{{"undecidable",
                                   {{"lo", r.unresolved.lo().to_decimal(12, MPFR_RNDD)},
                                    {"hi", r.unresolved.hi().to_decimal(12, MPFR_RNDU)}}}}
                                 .dump()
                          << "\n";
            else
                std::cout << "undecidable on " << r.unresolved.str(10) << "\n";
            return kExitUndecidable;
        case IsolateKind::Divisor:
            break;
    }
    if (opt.oracle) oracle_check_divisor(f, r.divisor);
    if (opt.json_out)
        std::cout << divisor_to_json(r.divisor, opt.digits).dump() << "\n";
    else
        print_divisor_text(r.divisor, opt);
    return kExitOk;
}

int cmd_deflate(const std::string& text, const std::string& gamma_s, int order,
                const Options& opt) {
    Expr f = parse(text);
    Rational gamma = parse_rational_arg(gamma_s);
    if (gamma < 0 || gamma > 1) throw SyntaxError(0, {"gamma in [0,1]"}, gamma_s);
    check_analytic(f, opt.cfg);
    auto coeffs = taylor_coeffs(f, Point::rational(gamma), order, opt.cfg.precision_start);
    auto g = deflate(coeffs);
    if (!domination_check(coeffs, g, opt.cfg.precision_start))
        std::cerr << "warning: domination identity violated (interval arithmetic bug?)\n";
    if (opt.oracle) oracle_check_deflate(f, gamma, g);
    if (opt.json_out) {
        json arr = json::array();
        for (const Interval& c : g)
            arr.push_back({{"lo", c.lo().to_decimal(opt.digits, MPFR_RNDD)},
                           {"hi", c.hi().to_decimal(opt.digits, MPFR_RNDU)},
                           {"width", c.width(64).to_decimal(4, MPFR_RNDU)}});
        std::cout << json{{"deflated", std::move(arr)}}.dump() << "\n";
    } else {
        std::cout << "deflated coefficients of (f(x)-f(g))/(x-g) at g=" << to_string(gamma)
                  << ":\n";
        for (std::size_t n = 0; n < g.size(); ++n) {
            std::cout << "  [" << n << "] " << g[n].str(opt.digits) << "  width "
                      << g[n].width(64).to_decimal(4, MPFR_RNDU);
            if (g[n].is_point()) std::cout << "  = " << to_string(g[n].lo().to_rational());
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_eval(const std::string& text, const std::string& point_s, const Options& opt) {
    Expr f = parse(text);
    Rational at = parse_rational_arg(point_s);
    if (at < 0 || at > 1) throw SyntaxError(0, {"point in [0,1]"}, point_s);
    check_analytic(f, opt.cfg);
    Interval v = eval(f, Interval::of_rational(at, opt.cfg.precision_start),
                      opt.cfg.precision_start);
    auto ex = exact_value(f, at);
    std::string exact_str;
    if (ex) {
        if (sgn(ex->b) == 0)
            exact_str = to_string(ex->a);
        else if (sgn(ex->a) == 0)
            exact_str = to_string(ex->b) + "*pi";
        else
            exact_str = to_string(ex->a) + " + " + to_string(ex->b) + "*pi";
    }
    if (opt.json_out) {
        json j{{"lo", v.lo().to_decimal(opt.digits, MPFR_RNDD)},
               {"hi", v.hi().to_decimal(opt.digits, MPFR_RNDU)},
               {"width", v.width(64).to_decimal(4, MPFR_RNDU)}};
        if (ex) j["exact"] = exact_str;
        std::cout << j.dump() << "\n";
    } else {
        if (ex) std::cout << "exact: " << exact_str << "\n";
        std::cout << "enclosure: " << v.str(opt.digits) << " width "
                  << v.width(64).to_decimal(4, MPFR_RNDU) << "\n";
    }
    return kExitOk;
}

Ideal ideal_from_text(const std::string& text, const Options& opt, Expr* parsed = nullptr) {
    Expr g = parse(text);
    if (parsed) *parsed = g;
    FromGeneratorResult r = from_generator(g, opt.cfg);
    if (!r.decided) throw IsolateResult{IsolateKind::Undecidable, {}, r.unresolved};
    if (opt.oracle && !r.ideal.is_zero()) oracle_check_divisor(g, r.ideal.divisor());
    return r.ideal;
}

void print_ideal(const Ideal& i, const Options& opt) {
    if (opt.json_out) {
        std::cout << ideal_to_json(i, opt.digits).dump() << "\n";
        return;
    }
    if (i.is_zero()) {
        std::cout << "zero ideal\n";
        return;
    }
    if (i.is_unit()) {
        std::cout << "unit ideal <1>\n";
        return;
    }
    print_divisor_text(i.divisor(), opt);
}

std::string factor_text(const MaximalFactor& f, int digits) {
    std::string base = f.point.is_exact()
                           ? (f.point.value().get_den() == 1
                                  ? "M_" + to_string(f.point.value())
                                  : "M_{" + to_string(f.point.value()) + "}")
                                          : "M_[" +
                                                f.point.interval().lo().to_decimal(8, MPFR_RNDD) +
                                                "," +
                                                f.point.interval().hi().to_decimal(8, MPFR_RNDU) +
                                                "]";
    (void)digits;
    return base + "^" + std::to_string(f.exponent);
}

int cmd_ideal(CLI::App* sub, const Options& opt) {
    const std::string name = sub->get_name();
    auto arg = [&](const char* a) { return sub->get_option(a)->as<std::string>(); };
    if (name == "from") {
        print_ideal(ideal_from_text(arg("expr"), opt), opt);
        return kExitOk;
    }
    if (name == "sum" || name == "product" || name == "intersect" || name == "quotient") {
        Ideal a = ideal_from_text(arg("f"), opt);
        Ideal b = ideal_from_text(arg("g"), opt);
        Ideal r = name == "sum"       ? sum(a, b, opt.cfg)
                  : name == "product" ? product(a, b, opt.cfg)
                  : name == "intersect" ? intersect(a, b, opt.cfg)
                                        : quotient(a, b, opt.cfg);
        print_ideal(r, opt);
        return kExitOk;
    }
    if (name == "member") {
        Expr f = parse(arg("expr"));
        Ideal i = ideal_from_text(arg("--in"), opt);
        Tribool t = membership(f, i, opt.cfg);
        if (t == Tribool::Unknown) {
            std::cout << (opt.json_out ? "{\"member\":\"undecidable\"}" : "undecidable") << "\n";
            return kExitUndecidable;
        }
        bool yes = t == Tribool::Yes;
        if (opt.oracle) {
            // membership of polynomials reduces to exact divisor domination
            auto pf = expr_to_ratpoly(normalize(f));
            auto pg = i.generator() ? expr_to_ratpoly(*i.generator()) : std::nullopt;
            if (pf && pg && !pf->is_zero() && !pg->is_zero()) {
                bool oracle_yes = true;
                for (const auto& root : exact_unit_interval_divisor(*pg)) {
                    if (root.exact) {
                        RatPoly rem = *pf;
                        int mult = 0;
                        while (!rem.is_zero() && sgn(rem.eval(root.value)) == 0) {
                            rem = poly_divmod(rem, RatPoly::linear_root(root.value)).first;
                            ++mult;
                        }
                        if (mult < root.multiplicity) oracle_yes = false;
                    } else {
                        // irrational root of g: f contains it iff gcd(f, g)
                        // has a root in the isolating interval
                        RatPoly common = poly_gcd(*pf, *pg);
                        if (common.degree() < 1 ||
                            sturm_count(common, root.lo, root.hi) < 1)
                            oracle_yes = false;
                    }
                }
                if (oracle_yes != yes) throw OracleMismatch{"membership verdict"};
            }
        }
        std::cout << (opt.json_out ? (yes ? "{\"member\":true}" : "{\"member\":false}")
                                   : (yes ? "true" : "false"))
                  << "\n";
        return kExitOk;
    }
    if (name == "factor") {
        Ideal i = ideal_from_text(arg("expr"), opt);
        auto fs = factor_maximals(i);
        if (opt.json_out) {
            std::cout << factors_to_json(fs, opt.digits).dump() << "\n";
        } else if (fs.empty()) {
            std::cout << "unit ideal: empty product\n";
        } else {
            for (std::size_t k = 0; k < fs.size(); ++k)
                std::cout << (k ? " * " : "") << factor_text(fs[k], opt.digits);
            std::cout << "\n";
        }
        return kExitOk;
    }
    if (name == "is-maximal" || name == "is-prime") {
        Ideal i = ideal_from_text(arg("expr"), opt);
        bool v = name == "is-maximal" ? is_maximal(i) : is_prime(i);
        std::cout << (opt.json_out ? (v ? "{\"result\":true}" : "{\"result\":false}")
                                   : (v ? "true" : "false"))
                  << "\n";
        return kExitOk;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified zero divisors and principal-ideal algebra for closed-form "
                 "analytic functions on [0,1]"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags are accepted after subcommands too

    Options opt;
    std::string tolerance_s, format = "text";
    int precision = 53, max_precision = 1024, mult_cap = 16;
    auto ladder = CLI::IsMember({53, 128, 256, 512, 1024});
    app.add_option("--precision", precision, "working precision start (bits)")->check(ladder);
    app.add_option("--max-precision", max_precision, "precision cap (bits)")->check(ladder);
    app.add_option("--tolerance", tolerance_s, "isolation tolerance, e.g. 2^-53");
    app.add_option("--mult-cap", mult_cap, "multiplicity search cap");
    app.add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--oracle", opt.oracle, "cross-check polynomial inputs against the exact oracle");

    auto* roots_cmd = app.add_subcommand("roots", "certified divisor of f on [0,1]");
    std::string roots_expr;
    roots_cmd->add_option("expr", roots_expr, "expression")->required();

    auto* deflate_cmd = app.add_subcommand("deflate", "Taylor coefficients of (f(x)-f(g))/(x-g)");
    std::string deflate_expr, deflate_gamma;
    int deflate_order = 4;
    deflate_cmd->add_option("expr", deflate_expr)->required();
    deflate_cmd->add_option("gamma", deflate_gamma, "rational center in [0,1]")->required();
    deflate_cmd->add_option("order", deflate_order, "number of coefficients")->required();

    auto* eval_cmd = app.add_subcommand("eval", "rigorous enclosure of f at a rational point");
    std::string eval_expr, eval_point;
    eval_cmd->add_option("expr", eval_expr)->required();
    eval_cmd->add_option("point", eval_point)->required();

    auto* ideal_cmd = app.add_subcommand("ideal", "principal-ideal algebra");
    ideal_cmd->require_subcommand(1);
    std::vector<CLI::App*> ideal_subs;
    for (const char* n : {"from", "factor", "is-maximal", "is-prime"}) {
        auto* s = ideal_cmd->add_subcommand(n);
        s->add_option("expr", "generator expression")->required();
        ideal_subs.push_back(s);
    }
    for (const char* n : {"sum", "product", "intersect", "quotient"}) {
        auto* s = ideal_cmd->add_subcommand(n);
        s->add_option("f", "first generator")->required();
        s->add_option("g", "second generator")->required();
        ideal_subs.push_back(s);
    }
    {
        auto* s = ideal_cmd->add_subcommand("member", "is f in the ideal generated by --in?");
        s->add_option("expr", "candidate member")->required();
        s->add_option("--in", "generator of the ideal")->required();
        ideal_subs.push_back(s);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (precision > max_precision) {
        std::cerr << "error: --precision exceeds --max-precision\n";
        return kExitUsage;
    }
    opt.cfg.precision_start = precision;
    opt.cfg.precision_cap = max_precision;
    opt.cfg.mult_cap = mult_cap;
    opt.json_out = format == "json";
    try {
        if (!tolerance_s.empty()) opt.cfg.tolerance = parse_rational_arg(tolerance_s);

        if (roots_cmd->parsed()) return cmd_roots(roots_expr, opt);
        if (deflate_cmd->parsed()) return cmd_deflate(deflate_expr, deflate_gamma, deflate_order, opt);
        if (eval_cmd->parsed()) return cmd_eval(eval_expr, eval_point, opt);
        for (CLI::App* s : ideal_subs)
            if (s->parsed()) return cmd_ideal(s, opt);
        return kExitUsage;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DivisionByZeroConstant& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotAnalytic;
    } catch (const NotAnalyticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotAnalytic;
    } catch (const PointIdentityUndecidable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPointIdentity;
    } catch (const IsolateResult& r) {
        std::cerr << "undecidable on " << r.unresolved.str(10) << "\n";
        return kExitUndecidable;
    } catch (const OracleMismatch& m) {
        std::cerr << "oracle mismatch: " << m.what << "\n";
        return kExitOracleMismatch;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
