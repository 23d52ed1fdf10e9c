"""Smoke tests for the python module (and the CLI through subprocess)."""
import json
import os
import subprocess

import pytest

anaring = pytest.importorskip("anaring")


def test_parse_roundtrip():
    assert anaring.parse_roundtrip("x^2 - 1") == "x^2 - 1"
    assert anaring.parse_roundtrip("sin(pi * x)") == "sin(pi*x)"
    assert anaring.parse_roundtrip("0.25") == "1/4"


def test_parse_error():
    with pytest.raises(anaring.ExprSyntaxError):
        anaring.parse_roundtrip("x^2^3")


def test_differentiate():
    assert anaring.differentiate("x^2") == "2*x"
    assert anaring.differentiate("exp(x)") == "exp(x)"
    assert anaring.differentiate("sin(pi*x)") == "pi*cos(pi*x)"


def test_eval_exact():
    a, b = anaring.eval_exact("x^2 + 1", "1/2")
    assert (a, b) == ("5/4", "0")
    a, b = anaring.eval_exact("pi*x", "1/3")
    assert (a, b) == ("0", "1/3")
    assert anaring.eval_exact("exp(x)", "1") is None


def test_eval_enclosure():
    lo, hi = anaring.eval_enclosure("exp(x)", "1")
    assert float(lo) <= 2.718281828459045 <= float(hi)


def test_not_analytic():
    with pytest.raises(anaring.NotAnalytic):
        anaring.eval_enclosure("1/(x - 1/2)", "1/4")


def test_taylor_and_deflate():
    cs = anaring.taylor_coefficients("exp(x)", "0", 3)
    assert len(cs) == 4
    assert float(cs[2][0]) <= 0.5 <= float(cs[2][1])
    g = anaring.deflate("x^2 - 1", "1", 2)
    assert float(g[0][0]) <= 2 <= float(g[0][1])
    assert float(g[1][0]) <= 1 <= float(g[1][1])


def test_isolate_zeros():
    r = anaring.isolate_zeros("x*(x - 1/2)^2")
    assert r["kind"] == "divisor"
    pts = [(e["point"]["value"], e["multiplicity"]) for e in r["divisor"]]
    assert pts == [("0", 1), ("1/2", 2)]

    assert anaring.isolate_zeros("0*exp(x)")["kind"] == "zero-function"
    assert anaring.isolate_zeros("sin(x)^2 + cos(x)^2 - 1")["kind"] == "undecidable"

    r = anaring.isolate_zeros("exp(x) - 2")
    assert r["kind"] == "divisor"
    enc = r["divisor"][0]["point"]
    assert enc["kind"] == "enclosure"
    assert float(enc["lo"]) <= 0.6931471805599453 <= float(enc["hi"])


def test_ideal_algebra():
    i = anaring.ideal("x - 1/2")
    assert i["ideal"] == "principal"
    assert i["divisor"][0]["point"]["value"] == "1/2"

    s = anaring.ideal_op("sum", "(x - 1/2)^2", "(x - 1/2)*(x - 1/3)")
    assert [(e["point"]["value"], e["multiplicity"]) for e in s["divisor"]] == [("1/2", 1)]

    p = anaring.ideal_op("product", "x", "x")
    assert [(e["point"]["value"], e["multiplicity"]) for e in p["divisor"]] == [("0", 2)]

    assert anaring.membership("x - 1", "x^2 - 1") is True
    assert anaring.membership("x - 1/2", "x - 1/3") is False
    assert anaring.is_maximal("x - 1/3") is True
    assert anaring.is_maximal("(x - 1/3)^2") is False

    fs = anaring.factor_maximals("x*(x - 1/2)^2")
    assert [(f["point"]["value"], f["exponent"]) for f in fs] == [("0", 1), ("1/2", 2)]


@pytest.mark.skipif("ANARING_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_subprocess():
    cli = os.environ["ANARING_CLI"]
    r = subprocess.run([cli, "roots", "x*(x-1/2)^2", "--format", "json"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["divisor"][1]["multiplicity"] == 2
    r = subprocess.run([cli, "roots", "sin(x)^2+cos(x)^2-1"], capture_output=True, text=True)
    assert r.returncode == 4
