#!/usr/bin/env python3
"""Smoke test for the hermix_py extension module.

Builds the cdylib if needed, stages it under the import name, and exercises
the main types and operations end to end.
"""

import math
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def stage_module() -> Path:
    lib = ROOT / "target" / "release" / "libhermix_py.so"
    if not lib.exists():
        print("building hermix-py (cargo build --release -p hermix-py)...")
        subprocess.run(
            ["cargo", "build", "--release", "-p", "hermix-py"],
            cwd=ROOT,
            check=True,
        )
    stage = Path(tempfile.mkdtemp(prefix="hermix_py_"))
    shutil.copy2(lib, stage / "hermix_py.so")
    return stage


sys.path.insert(0, str(stage_module()))
import hermix_py as hx  # noqa: E402

checks = 0


def check(cond, what):
    global checks
    assert cond, what
    checks += 1
    print(f"ok: {what}")


# Construction and text round trip.
triangle = hx.MixedGraph(3, [(0, 1, "F"), (1, 2, "F"), (0, 2, "U")])
check(triangle.n == 3 and triangle.m == 3, "semi-negative triangle built")
reparsed = hx.MixedGraph.parse(triangle.to_text())
check(reparsed == triangle, "text round trip")
check(triangle.gain(0, 1) == 1 and triangle.gain(1, 0) == 5, "gain exponents")

# Exact characteristic polynomial by both routes.
check(hx.charpoly(triangle) == [1, 0, -3, 1], "charpoly x^3 - 3x + 1")
check(hx.charpoly_subgraphs(triangle) == hx.charpoly(triangle), "routes agree")
check(hx.charpoly_pretty(triangle) == "x^3 - 3*x + 1", "pretty rendering")

# Numeric spectrum against the exact cubic.
eig = hx.eigenvalues(triangle)
check(abs(hx.spectral_radius(triangle) - 1.8794) < 1e-3, "radius of the triangle")
check(abs(sum(e * e for e in eig) - 6.0) < 1e-9, "sum of squares = 2m")

# Exact interval decisions.
check(hx.radius_strictly_below(triangle, 4), "triangle below 2")
k13 = hx.MixedGraph(4, [(0, 1, "U"), (0, 2, "U"), (0, 3, "U")])
check(not hx.radius_strictly_below(k13, 3), "star exactly at sqrt(3)")

# Switching machinery: the directed hexagon is equivalent to its underlying
# graph, and the witness replays.
hexagon = hx.MixedGraph(6, [(i, (i + 1) % 6, "F") for i in range(6)])
plain = hx.MixedGraph(6, [(i, (i + 1) % 6, "U") for i in range(6)])
witness = hx.switching_equivalent(hexagon, plain)
check(witness is not None, "directed hexagon ~ undirected hexagon")
theta, used_converse = witness
check(not used_converse, "no converse needed")
check(hx.apply_switching(hexagon, list(theta)) == plain, "witness replays")
check(hx.underlying_cospectral(hexagon), "cospectral with underlying graph")

# Two-way switching turns a single arc into an undirected edge.
arc = hx.MixedGraph(2, [(0, 1, "F")])
check(hx.two_way_switch(arc, [0]) == hx.MixedGraph(2, [(0, 1, "U")]), "two-way switch")

# Rank, twins and families.
k23 = hx.MixedGraph(5, [(a, b, "U") for a in (0, 1) for b in (2, 3, 4)])
check(hx.rank(k23) == (2, 3), "rank of K_{2,3}")
reduced, rep = hx.twin_reduction(k23)
check(reduced.n == 2 and rep[3] == rep[2], "twin reduction to an edge")

c4eq = hx.build_family("cycle=", [4])
check(abs(hx.spectral_radius(c4eq) - math.sqrt(2)) < 1e-9, "rho(C4=) = sqrt(2)")
below, tag = hx.classify_radius(c4eq, 4)
check(below and tag == "C4=", "C4= classified")

box = hx.build_family("box", [2, 0, 1, 0])
below, tag = hx.classify_radius(box, 4)
check(below and tag == "Box_{2,0,1,0}", "box graph classified")

orientations = hx.enumerate_orientations(hx.MixedGraph(2, [(0, 1, "U")]))
check(len(orientations) == 3, "3 orientations of one edge")

ok, report = hx.verify_suite("nullity-cycles", 12)
check(ok, "nullity-cycles suite passes")

print(f"\nsmoke test passed: {checks} checks")
