#!/usr/bin/env python3
"""Run the wdiv CLI, check exit codes, validate JSON output against schemas/."""

import json
import pathlib
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

resources = []
for p in schema_dir.glob("*.schema.json"):
    doc = json.loads(p.read_text())
    resources.append((doc["$id"], Resource.from_contents(doc)))
registry = Registry().with_resources(resources)


def validator(name):
    doc = json.loads((schema_dir / f"{name}.schema.json").read_text())
    return Draft202012Validator(doc, registry=registry)


failures = []


def run(args, code, schema=None, stream="stdout"):
    r = subprocess.run([cli, *args], capture_output=True, text=True)
    label = " ".join(args)
    if r.returncode != code:
        failures.append(f"{label}: exit {r.returncode}, expected {code}\n{r.stderr}")
        return r
    if schema:
        text = r.stdout if stream == "stdout" else r.stderr
        errors = list(validator(schema).iter_errors(json.loads(text)))
        for e in errors:
            failures.append(f"{label}: {schema} schema: {e.message}")
    return r


run(["eval", "F", "--re", "2"], 0, "eval")
run(["eval", "E", "--re", "3", "--im", "1", "--h", "2", "--k", "5", "--method", "series"], 0, "eval")
run(["eval", "F0", "--re", "-1.5", "--im", "4", "--h", "1", "--k", "3"], 0, "eval")
run(["voronoi", "--x", "1000.5", "--k", "3"], 0, "voronoi")
run(["voronoi", "--x", "300.5", "--a", "1", "--M", "20000", "--k", "2"], 0, "voronoi")
run(["voronoi", "--x", "300.5", "--main", "printed"], 0, "voronoi")
run(["riesz", "--x", "100.5", "--a", "2", "--h", "3", "--k", "7"], 0, "riesz")
run(["meansquare", "--X", "2000", "--cutoff", "5000"], 0, "meansquare")
run(["meansquare", "--X", "2000", "--a", "1", "--k", "2"], 0, "meansquare")
run(["check", "laurent", "--k", "3", "--formula", "derived"], 0, "laurent")
run(["check", "laurent", "--k", "3"], 2, "laurent")
run(["check", "laurent", "--k", "1"], 0, "laurent")
run(["check", "bessel"], 0)
run(["check", "funceq", "--h", "2", "--k", "5", "--points", "5"], 0)

run(["eval", "F", "--re", "2", "--h", "2", "--k", "4"], 1, "error", "stderr")
run(["eval", "F", "--re", "1"], 2, "error", "stderr")
run(["eval", "F", "--re", "1.5", "--method", "series"], 1, "error", "stderr")
run(["eval", "F", "--re", "2", "--im", "500"], 1, "error", "stderr")
run(["voronoi", "--x", "0.5"], 1, "error", "stderr")
run(["sieve", "--xmax", "20000000"], 1, "error", "stderr")
run(["eval", "G", "--re", "2"], 1)
run(["eval", "F"], 1)

# identical arguments and seed give identical bytes
for args in (["check", "funceq", "--seed", "9", "--k", "7", "--h", "3", "--points", "4"],
             ["voronoi", "sweep", "--xmin", "1000", "--xmax", "3000", "--points", "12", "--Nlist", "10,100,0"],
             ["meansquare", "sweep", "--Xlist", "1000,3000", "--cutoff", "2000"],
             ["sieve", "--xmax", "2000"]):
    a = subprocess.run([cli, *args], capture_output=True).stdout
    b = subprocess.run([cli, *args], capture_output=True).stdout
    if a != b or not a:
        failures.append(f"{' '.join(args)}: output differs between runs")

with tempfile.TemporaryDirectory() as d:
    r = run(["--out", d, "recipe", "funceq", "--seed", "1"], 0)
    if not (pathlib.Path(d) / "funceq.csv").exists() or "recipe funceq: PASS" not in r.stdout:
        failures.append("recipe funceq: missing csv or PASS line")

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
