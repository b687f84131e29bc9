#!/usr/bin/env python3
"""End-to-end checks of the ultragrade command line."""
import json
import os
import subprocess
import sys

BIN, DATA = sys.argv[1], sys.argv[2]
failures = []


def run(*args, env=None):
    e = dict(os.environ, ULTRAGRADE_COLOR="never")
    if env:
        e.update(env)
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=e)


def expect(name, cond, detail=""):
    if not cond:
        failures.append(f"{name}: {detail}")


def data(name):
    return os.path.join(DATA, name)


r = run("analyze", data("ex2.ug"), "--horizon", "40", "--format", "json")
expect("analyze ex2 exit", r.returncode == 0, r.stderr)
doc = json.loads(r.stdout)
expect("ex2 strong_z", doc["strong_z"] == "No", doc["strong_z"])
expect("ex2 eps_strong_z", doc["eps_strong_z"] == "No", doc["eps_strong_z"])
expect("ex2 unital", doc["unital"] is False)
expect("ex2 cond-y", doc["condition_y"]["status"] == "ViolationUpToHorizon")

r = run("analyze", data("ex2.ug"), "--assert")
expect("assert exit", r.returncode == 1, str(r.returncode))
r = run("analyze", data("single_loop.ug"), "--assert")
expect("assert ok exit", r.returncode == 0, r.stdout + r.stderr)

r = run("check", "strong-f", data("single_loop.ug"))
expect("check strong-f exit", r.returncode == 0, r.stderr)
expect("check strong-f text", "strong-f: Yes" in r.stdout, r.stdout)
expect("check strong-f once", r.stdout.count("strong-f: Yes") == 1, r.stdout)

r = run("check", "cond-y", data("ex2.ug"), "--assert", "--format", "json")
expect("check cond-y assert", r.returncode == 0, str(r.returncode))
r = run("check", "unital", data("ex2.ug"), "--assert", "--format", "json")
expect("check unital assert", r.returncode == 1, str(r.returncode))

r = run("graph", data("two_range.ug"))
expect("graph exit", r.returncode == 0, r.stderr)
for line in ("edge e@u : u -> { u }", "edge e@v : u -> { v }", "edge f@u : v -> { u }"):
    expect("graph edge " + line, line in r.stdout, r.stdout)
with open(os.path.join(os.environ.get("TMPDIR", "/tmp"), "ultragrade_eg.ug"), "w") as fh:
    fh.write(r.stdout)
    path = fh.name
r2 = run("graph", path)
expect("graph of a graph keeps the shape", r2.returncode == 0 and r2.stdout.count("edge ") == 3, r2.stdout)

r = run("eval", data("ef.ug"), "s(e)*s(f)", "--format", "json")
doc = json.loads(r.stdout)
expect("eval normal form", doc["normal_form"] == "s(e)*s(f)*p{v}", doc["normal_form"])
expect("eval degree", doc["z_degree"] == 2 and doc["f_degree"] == "e f", str(doc))
r = run("eval", data("ef.ug"), "s(e) + p{u}", "--format", "json")
doc = json.loads(r.stdout)
expect("eval inhomogeneous", doc["z_degree"] is None and doc["f_degree"] is None, str(doc))

r = run("skew", data("ef.ug"), "s(e)*st(e)", "--verify-iso", "3", "--format", "json")
doc = json.loads(r.stdout)
expect("skew relations", all(c["pass"] for c in doc["relations"]["checks"]), str(doc))
expect("skew grade", [c["grade"] for c in doc["components"]] == ["1"], str(doc))

r = run("analyze", data("ef.ug"), env={"ULTRAGRADE_COLOR": "always"})
expect("color on", "\033[" in r.stdout)
r = run("analyze", data("ef.ug"))
expect("color off", "\033[" not in r.stdout)

r = run("analyze", data("missing.ug"))
expect("missing file exit", r.returncode == 2, str(r.returncode))
expect("missing file message", "IOError" in r.stderr, r.stderr)
r = run("eval", data("ef.ug"), "s(q)")
expect("bad expr exit", r.returncode == 2, str(r.returncode))
r = run("bogus")
expect("usage exit", r.returncode == 64, str(r.returncode))
r = run("check", "nonsense", data("ef.ug"))
expect("bad property exit", r.returncode == 64, str(r.returncode))
r = run("--version")
expect("version", r.stdout.strip() == "0.1.0", r.stdout)

NAMES = {"strong_z": "strong-z", "eps_strong_z": "eps-z", "strong_f": "strong-f",
         "eps_strong_f": "eps-f", "gauge_saturated": "gauge"}
for name in sorted(os.listdir(DATA)):
    if not name.endswith(".ug"):
        continue
    j1 = run("analyze", data(name), "--format", "json").stdout
    j2 = run("analyze", data(name), "--format", "json").stdout
    expect("deterministic " + name, j1 == j2)
    doc = json.loads(j1)
    text = run("analyze", data(name)).stdout
    for key, label in NAMES.items():
        expect(f"text matches json {name} {key}", f"  {label}: {doc[key]}\n" in text, text)
    expect(f"text cond-y {name}", f"condition (Y): {doc['condition_y']['status']}" in text, text)

if failures:
    print("\n".join(failures))
    sys.exit(1)
print("cli ok")
