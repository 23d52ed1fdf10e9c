#!/usr/bin/env python3
"""Exit-code contract checks for the CLI, runnable under ctest without pytest."""
import json
import subprocess
import sys

CLI = sys.argv[1] if len(sys.argv) > 1 else "anaring"
failures = 0


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def expect(code, *args):
    global failures
    r = run(*args)
    if r.returncode != code:
        print(f"FAIL: {' '.join(args)} -> exit {r.returncode}, expected {code}")
        print(r.stdout, r.stderr)
        failures += 1


# 0 ok / 1 usage / 2 parse / 3 not-analytic / 4 undecidable / 5 point identity
expect(0, "roots", "x*(x-1/2)^2")
expect(0, "roots", "0*exp(x)")
expect(2, "roots", "x^2^3")
expect(2, "roots", "log(x)")
expect(3, "roots", "1/(x-1/2)")
expect(4, "roots", "sin(x)^2+cos(x)^2-1")
expect(1, "nonsense-subcommand")
expect(1)

expect(0, "eval", "x^2+1", "1/2")
expect(0, "deflate", "x^2-1", "1", "2")
expect(0, "ideal", "member", "x-1", "--in", "x^2-1")
expect(0, "ideal", "is-maximal", "x-1/3")
expect(0, "ideal", "factor", "x*(x-1/2)^2")

# --oracle agreement on polynomial inputs
expect(0, "roots", "x*(x-1/2)^2", "--oracle")
expect(0, "deflate", "x^2-1", "1", "2", "--oracle")
expect(0, "ideal", "member", "x-1", "--in", "x^2-1", "--oracle")

# JSON output is valid and matches the divisor schema
r = run("roots", "x*(x-1/2)^2", "--format", "json")
doc = json.loads(r.stdout)
entries = doc["divisor"]
assert entries[0]["point"]["kind"] == "rational", doc
assert entries[0]["point"]["value"] == "0", doc
assert entries[1]["point"]["value"] == "1/2", doc
assert entries[1]["multiplicity"] == 2, doc

r = run("eval", "x^2+1", "1/2", "--format", "json")
doc = json.loads(r.stdout)
assert doc["exact"] == "5/4", doc

r = run("ideal", "from", "x-1/2", "--format", "json")
doc = json.loads(r.stdout)
assert doc["ideal"] == "principal", doc
assert doc["generator"] == "x - 1/2", doc

r = run("ideal", "factor", "x*(x-1/2)^2", "--format", "json")
doc = json.loads(r.stdout)
assert [(f["point"]["value"], f["exponent"]) for f in doc] == [("0", 1), ("1/2", 2)], doc

r = run("ideal", "sum", "(x-1/2)^2", "(x-1/2)*(x-1/3)", "--format", "json")
doc = json.loads(r.stdout)
assert doc["ideal"] == "principal", doc
assert [(e["point"]["value"], e["multiplicity"]) for e in doc["divisor"]] == [("1/2", 1)], doc

r = run("ideal", "member", "x-1", "--in", "x^2-1", "--format", "json")
doc = json.loads(r.stdout)
assert doc == {"member": True}, doc

r = run("roots", "exp(x)-2", "--format", "json")
doc = json.loads(r.stdout)
p = doc["divisor"][0]["point"]
assert p["kind"] == "enclosure" and set(p) == {"kind", "lo", "hi", "width"}, doc

r = run("roots", "0*exp(x)", "--format", "json")
assert json.loads(r.stdout) == {"zero_function": True}

r = run("roots", "sin(x)^2+cos(x)^2-1", "--format", "json")
assert r.returncode == 4 and "undecidable" in json.loads(r.stdout)

if failures:
    print(f"{failures} CLI exit-code checks failed")
    sys.exit(1)
print("CLI exit-code contract holds")
