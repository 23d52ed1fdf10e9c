// Python bindings for the main operations: parsing, differentiation,
// rigorous evaluation, Taylor deflation, root isolation and ideal algebra.
// Results cross the boundary as strings and plain dict/list structures.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "anaring/exact.hpp"
#include "anaring/ideal.hpp"
#include "anaring/json_io.hpp"
#include "anaring/roots.hpp"
#include "anaring/taylor.hpp"

namespace py = pybind11;
using namespace anaring;

namespace {

Config make_config(int precision, int max_precision, const std::string& tolerance, int mult_cap) {
    Config cfg;
    cfg.precision_start = precision;
    cfg.precision_cap = max_precision;
    cfg.mult_cap = mult_cap;
    if (!tolerance.empty()) {
        if (tolerance.rfind("2^-", 0) == 0) {
            long k = std::stol(tolerance.substr(3));
            cfg.tolerance = Rational(mpz_class(1), mpz_class(1) << k);
        } else {
            Expr e = normalize(parse(tolerance));
            cfg.tolerance = e.value();
        }
    }
    return cfg;
}

py::object json_to_py(const nlohmann::json& j) {
    py::module_ json_mod = py::module_::import("json");
    return json_mod.attr("loads")(j.dump());
}

Rational rational_arg(const std::string& s) {
    Expr e = normalize(parse(s));
    if (e.kind() == ExprKind::Neg && e.child().is_const()) return -e.child().value();
    if (!e.is_const()) throw py::value_error("expected a rational literal, got: " + s);
    return e.value();
}

}  // namespace

PYBIND11_MODULE(anaring, m) {
    m.doc() = "certified zero divisors and principal-ideal algebra for closed-form analytic "
              "functions on [0,1]";

    py::register_exception<SyntaxError>(m, "ExprSyntaxError");
    py::register_exception<NotAnalyticError>(m, "NotAnalytic");
    py::register_exception<PointIdentityUndecidable>(m, "PointIdentityUndecidableError");

    m.def("parse_roundtrip", [](const std::string& text) { return serialize(parse(text)); },
          "parse and re-serialize an expression in canonical form");

    m.def("differentiate",
          [](const std::string& text) { return serialize(normalize(anaring::differentiate(parse(text)))); },
          "symbolic derivative, normalized, as canonical text");

    m.def("normalize",
          [](const std::string& text) { return serialize(anaring::normalize(parse(text))); });

    m.def(
        "eval_exact",
        [](const std::string& text, const std::string& at) -> py::object {
            auto v = exact_value(parse(text), rational_arg(at));
            if (!v) return py::none();
            return py::make_tuple(to_string(v->a), to_string(v->b));
        },
        py::arg("expr"), py::arg("at"),
        "exact value a + b*pi at a rational point as (a, b) strings, or None");

    m.def(
        "eval_enclosure",
        [](const std::string& text, const std::string& at, int precision) {
            Config cfg;
            Expr f = parse(text);
            check_analytic(f, cfg);
            Interval v = eval(f, Interval::of_rational(rational_arg(at), precision), precision);
            return py::make_tuple(v.lo().to_decimal(17, MPFR_RNDD),
                                  v.hi().to_decimal(17, MPFR_RNDU));
        },
        py::arg("expr"), py::arg("at"), py::arg("precision") = 53);

    m.def(
        "taylor_coefficients",
        [](const std::string& text, const std::string& center, int order, int precision) {
            auto cs = taylor_coeffs(parse(text), Point::rational(rational_arg(center)), order,
                                    precision);
            py::list out;
            for (const Interval& c : cs)
                out.append(py::make_tuple(c.lo().to_decimal(17, MPFR_RNDD),
                                          c.hi().to_decimal(17, MPFR_RNDU)));
            return out;
        },
        py::arg("expr"), py::arg("center"), py::arg("order"), py::arg("precision") = 53);

    m.def(
        "deflate",
        [](const std::string& text, const std::string& center, int order, int precision) {
            auto cs = taylor_coeffs(parse(text), Point::rational(rational_arg(center)), order,
                                    precision);
            auto g = deflate(cs);
            py::list out;
            for (const Interval& c : g)
                out.append(py::make_tuple(c.lo().to_decimal(17, MPFR_RNDD),
                                          c.hi().to_decimal(17, MPFR_RNDU)));
            return out;
        },
        py::arg("expr"), py::arg("center"), py::arg("order"), py::arg("precision") = 53);

    m.def(
        "isolate_zeros",
        [](const std::string& text, int precision, int max_precision, const std::string& tolerance,
           int mult_cap) -> py::object {
            Config cfg = make_config(precision, max_precision, tolerance, mult_cap);
            IsolateResult r = isolate_zeros(parse(text), cfg);
            py::dict out;
            switch (r.kind) {
                case IsolateKind::ZeroFunction:
                    out["kind"] = "zero-function";
                    return out;
                case IsolateKind::Undecidable:
                    out["kind"] = "undecidable";
                    return out;
                case IsolateKind::Divisor:
                    out["kind"] = "divisor";
                    out["divisor"] = json_to_py(divisor_to_json(r.divisor))["divisor"];
                    return out;
            }
            return out;
        },
        py::arg("expr"), py::arg("precision") = 53, py::arg("max_precision") = 1024,
        py::arg("tolerance") = "", py::arg("mult_cap") = 16);

    m.def(
        "ideal",
        [](const std::string& generator) -> py::object {
            Config cfg;
            FromGeneratorResult r = from_generator(parse(generator), cfg);
            if (!r.decided) return py::none();
            return json_to_py(ideal_to_json(r.ideal));
        },
        py::arg("generator"), "the principal ideal of a generator, as a JSON-shaped dict");

    m.def(
        "ideal_op",
        [](const std::string& op, const std::string& f, const std::string& g) -> py::object {
            Config cfg;
            FromGeneratorResult a = from_generator(parse(f), cfg);
            FromGeneratorResult b = from_generator(parse(g), cfg);
            if (!a.decided || !b.decided) return py::none();
            Ideal r;
            if (op == "sum") r = sum(a.ideal, b.ideal, cfg);
            else if (op == "product") r = product(a.ideal, b.ideal, cfg);
            else if (op == "intersect") r = intersect(a.ideal, b.ideal, cfg);
            else if (op == "quotient") r = quotient(a.ideal, b.ideal, cfg);
            else throw py::value_error("op must be sum|product|intersect|quotient");
            return json_to_py(ideal_to_json(r));
        },
        py::arg("op"), py::arg("f"), py::arg("g"));

    m.def(
        "membership",
        [](const std::string& f, const std::string& generator) -> py::object {
            Config cfg;
            FromGeneratorResult i = from_generator(parse(generator), cfg);
            if (!i.decided) return py::none();
            Tribool t = membership(parse(f), i.ideal, cfg);
            if (t == Tribool::Unknown) return py::none();
            return py::bool_(t == Tribool::Yes);
        },
        py::arg("f"), py::arg("generator"),
        "True/False membership of f in <generator>, None when undecidable");

    m.def(
        "is_maximal",
        [](const std::string& generator) -> py::object {
            Config cfg;
            FromGeneratorResult i = from_generator(parse(generator), cfg);
            if (!i.decided) return py::none();
            return py::bool_(is_maximal(i.ideal));
        },
        py::arg("generator"));

    m.def(
        "factor_maximals",
        [](const std::string& generator) -> py::object {
            Config cfg;
            FromGeneratorResult i = from_generator(parse(generator), cfg);
            if (!i.decided) return py::none();
            return json_to_py(factors_to_json(factor_maximals(i.ideal)));
        },
        py::arg("generator"));
}
