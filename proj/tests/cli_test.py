"""Exit codes, error messages and output stability of the command-line tool."""
import json
import os
import subprocess
import sys
import tempfile

EXE = sys.argv[1]
failures = []


def run(*args):
    return subprocess.run([EXE, *args], capture_output=True, text=True)


def expect(cond, what):
    if not cond:
        failures.append(what)


for cmd in ["validate", "analyze", "roots", "dims"]:
    a = run(cmd, "--preset", "p11222-resolved", "--format", "json")
    b = run(cmd, "--preset", "p11222-resolved", "--format", "json")
    expect(a.returncode == 0, f"{cmd} failed: {a.stderr}")
    expect(a.stdout == b.stdout, f"{cmd} output is not deterministic")
    json.loads(a.stdout)
    t = run(cmd, "--preset", "p11222-resolved")
    expect(t.returncode == 0 and t.stdout, f"{cmd} text output missing")

for cmd in ["deform", "cocycle"]:
    r = run(cmd, "--preset", "p11222-resolved", "--root", "0", "--format", "json")
    expect(r.returncode == 0, f"{cmd} failed: {r.stderr}")

d = json.loads(run("deform", "--preset", "p11222-resolved", "--root", "0", "--format", "json").stdout)
expect(d["result"]["composite_transition"] == "x6 -> x6 - 2*t*x3/(x1*x2)", "transition string")
o = run("deform", "--preset", "p11222-resolved", "--root", "0", "--orientation", "2", "--format", "json")
expect(o.returncode == 0, "orientation 2 failed")
expect(run("deform", "--preset", "p11222-resolved", "--root", "0", "--orientation", "6").returncode == 1,
       "interior orientation should be a domain error")
expect(run("deform", "--preset", "p11222-resolved", "--root", "9").returncode == 1, "bad root index")
expect(run("roots", "--preset", "quintic", "--format", "json").returncode == 0, "quintic roots")
expect(run("deform", "--preset", "quintic", "--root", "0").returncode == 1, "quintic has no roots")

# usage errors
expect(run("frobnicate", "--preset", "p1").returncode == 2, "unknown command")
expect(run("validate").returncode == 2, "missing model")
expect(run("validate", "--preset", "nope").returncode == 2, "unknown preset")
expect(run("validate", "--preset", "p1", "--model", "x.json").returncode == 2, "model and preset together")
expect(run("validate", "--preset", "p1", "--orientation", "0").returncode == 2, "orientation 0")
expect(run("--help").returncode == 0, "help")

with tempfile.TemporaryDirectory() as tmp:
    bad = os.path.join(tmp, "bad.json")
    with open(bad, "w") as fh:
        fh.write('{\n  "rank": 2,\n  "rays": [[1, 0],\n}\n')
    r = run("validate", "--model", bad)
    expect(r.returncode == 2, "syntax error exit code")
    expect("line 4" in r.stderr, f"syntax error location: {r.stderr!r}")
    bad_cone = os.path.join(tmp, "cone.json")
    with open(bad_cone, "w") as fh:
        json.dump({"rank": 2, "rays": [[1, 0], [0, 1]], "cones": [[1, 2], [1, 3]]}, fh)
    r = run("validate", "--model", bad_cone)
    expect(r.returncode == 2 and "/cones/1" in r.stderr, f"cone index error: {r.stderr!r}")
    nopoly = os.path.join(tmp, "nopoly.json")
    with open(nopoly, "w") as fh:
        json.dump({"rank": 1, "rays": [[1], [-1]], "cones": [[1], [2]]}, fh)
    expect(run("validate", "--model", nopoly).returncode == 0, "model without polynomial validates")
    expect(run("dims", "--model", nopoly).returncode == 1, "dims needs a polynomial")
    expect(run("validate", "--model", os.path.join(tmp, "missing.json")).returncode == 2, "missing file")

if failures:
    print("\n".join("FAIL: " + f for f in failures))
    sys.exit(1)
print("cli: all checks passed")
