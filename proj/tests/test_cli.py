#!/usr/bin/env python3
"""End-to-end checks of the command-line tool: output shapes, exit codes,
document round trips, and SVG determinism."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = sys.argv[1]

failures = []


def run(*args, expect_code=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if proc.returncode != expect_code:
        failures.append(f"{args}: exit {proc.returncode}, expected {expect_code}\n{proc.stderr}")
        return None
    return proc.stdout


def check(cond, label):
    if not cond:
        failures.append(label)


with tempfile.TemporaryDirectory() as tmpdir:
    tmp = Path(tmpdir)

    # bisector: figure classification and polyline endpoints
    out = run("bisector", "--norm", "l1", "--c1", "3,3", "--c2", "8,6")
    doc = json.loads(out)
    check(doc["kind"] == "V-", "bisector kind")
    check(doc["segment"] == [[7, 3], [4, 6]], "bisector segment")

    out = run("bisector", "--norm", "l2", "--c1", "0,0", "--c2", "2,0")
    doc = json.loads(out)
    check(doc["shape"] == "line", "l2 line shape")
    # a*x + b*y = c must describe x = 1
    a, b, c = doc["line"]["a"], doc["line"]["b"], doc["line"]["c"]
    check(b == 0 and a != 0 and c / a == 1, "l2 line is x=1")

    out = run("bisector", "--norm", "l1", "--c1", "3,3", "--c2", "6,6")
    doc = json.loads(out)
    check(doc["kind"] == "quadrant-degenerate", "quadrant kind")
    check("warning" in doc, "quadrant warning")

    # exit codes
    run("bisector", "--norm", "l1", "--c1", "1,1", "--c2", "1,1", expect_code=3)
    run("bisector", "--norm", "l7", "--c1", "0,0", "--c2", "1,2", expect_code=2)
    run("bisector", "--norm", "l1", "--c1", "zebra", "--c2", "1,2", expect_code=2)

    # areas on the 19-region embedding
    emb = tmp / "fig8.json"
    emb.write_text(json.dumps({"dimension": 2, "positions": [[0, 8], [10, 10], [4, 1], [8, 3]]}))
    svg1 = tmp / "a1.svg"
    svg2 = tmp / "a2.svg"
    out = run("areas", "--norm", "l1", "--embedding", str(emb), "--graph", "--svg", str(svg1))
    doc = json.loads(out)
    check(doc["count"] == 19, "fig8 count 19")
    check(doc["graph"]["n_v"] == 8 and doc["graph"]["n_e"] == 14, "fig8 graph")
    check(doc["graph"]["euler"]["pass"], "fig8 euler")
    run("areas", "--norm", "l1", "--embedding", str(emb), "--svg", str(svg2))
    check(svg1.read_bytes() == svg2.read_bytes(), "svg deterministic")

    # degenerate embedding: refused without --perturb, repaired with it
    bad = tmp / "bad.json"
    bad.write_text(json.dumps({"dimension": 2, "positions": [[0, 0], [2, 2], [5, 1]]}))
    run("areas", "--norm", "l1", "--embedding", str(bad), expect_code=4)
    out = run("areas", "--norm", "l1", "--embedding", str(bad), "--perturb")
    check(json.loads(out)["count"] >= 2, "perturbed areas")

    run("areas", "--norm", "l1", "--embedding", str(tmp / "missing.json"), expect_code=2)

    # maximal profiles round-trip through recognize4
    for which, euclidean in [("p0", False), ("p1", True), ("p2", True), ("p3", True)]:
        out = run("maximal", "--which", which)
        doc = json.loads(out)
        expected = 19 if which == "p0" else 18
        check(len(doc["rankings"]) == expected, f"{which} size")
        prof = tmp / f"{which}.json"
        prof.write_text(out)
        verdict = json.loads(run("recognize4", "--profile", str(prof)))
        check(verdict["euclidean_l2"] == euclidean, f"{which} verdict")
        if which == "p1":
            check(verdict["witness_profile"] == "P1", "p1 witness")
    run("maximal", "--which", "p9", expect_code=2)

    # recognize4 arity and parse errors
    three = tmp / "three.json"
    three.write_text(json.dumps({"m": 3, "rankings": [[0, 1, 2]]}))
    run("recognize4", "--profile", str(three), expect_code=5)
    garbled = tmp / "garbled.json"
    garbled.write_text("{not json")
    run("recognize4", "--profile", str(garbled), expect_code=2)

    # constructions
    out = run("construct", "--family", "theta-m4", "--m", "3")
    check(json.loads(out)["embedding"]["positions"] == [[0, 0], [1, 2], [5, 1]], "theta m3")
    out = run("construct", "--family", "l1-last", "--d", "2", "--verify")
    check(json.loads(out)["verification"]["pass"], "l1-last verify")
    out = run("construct", "--family", "linf-last", "--d", "1")
    doc = json.loads(out)
    check(len(doc["embedding"]["positions"]) == 2, "linf-last d1")
    run("construct", "--family", "nonsense", "--m", "4", expect_code=2)

    # experiment: deterministic and bounded by 19
    out = run("experiment-maxsearch", "--m", "4", "--trials", "0")
    check(json.loads(out)["max_cells"] == 0, "empty experiment")
    out1 = run("experiment-maxsearch", "--m", "4", "--trials", "20", "--seed", "7")
    out2 = run("experiment-maxsearch", "--m", "4", "--trials", "20", "--seed", "7")
    check(out1 == out2, "experiment deterministic")
    check(json.loads(out1)["max_cells"] <= 19, "experiment bound")

if failures:
    print("FAILURES:")
    for f in failures:
        print(" -", f)
    sys.exit(1)
print("cli checks passed")
