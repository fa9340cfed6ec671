"""Compare the gmpy2 and pure-Python rational backends.

Each backend runs in a fresh subprocess (the backend is chosen at import
time via HYPERK_BACKEND), timing a representative exact workload:
intersection patterns, graph construction, and the property suites.

Usage: python benchmarks/bench_backends.py
"""

import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json
import random
import time

from hyperk._rational import BACKEND
from hyperk.predicates import intersection_pattern
from hyperk.graphs import build_graph
from hyperk.verify import rand_curve, rand_isometry, run_suite

timings = {"backend": BACKEND}
rng = random.Random(0)
pairs = [(rand_curve(rng), rand_curve(rng)) for _ in range(2000)]
isos = [rand_isometry(rng) for _ in range(2000)]

t0 = time.perf_counter()
for (c1, c2), iso in zip(pairs, isos):
    intersection_pattern(iso.apply_curve(c1), iso.apply_curve(c2))
timings["patterns_2000"] = time.perf_counter() - t0

curves = []
while len(curves) < 14:
    c = rand_curve(rng)
    if all(c != x for x in curves):
        curves.append(c)
t0 = time.perf_counter()
for _ in range(50):
    build_graph(curves, allow_mixed=True)
timings["graphs_50x14"] = time.perf_counter() - t0

t0 = time.perf_counter()
run_suite("all", seed=0, scale="small")
timings["verify_all_small"] = time.perf_counter() - t0

print(json.dumps(timings))
"""


def run_backend(name: str) -> dict:
    env = dict(os.environ, HYPERK_BACKEND=name)
    out = subprocess.run(
        [sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True
    )
    if out.returncode != 0:
        raise RuntimeError(f"backend {name} failed:\n{out.stderr}")
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    results = []
    for name in ("gmpy2", "python"):
        try:
            results.append(run_backend(name))
        except (RuntimeError, ImportError) as exc:
            print(f"skipping {name}: {exc}", file=sys.stderr)
    if not results:
        sys.exit(1)
    keys = [k for k in results[0] if k != "backend"]
    header = f"{'workload':<22}" + "".join(f"{r['backend']:>12}" for r in results)
    print(header)
    print("-" * len(header))
    for k in keys:
        row = f"{k:<22}" + "".join(f"{r[k]:>11.3f}s" for r in results)
        print(row)
    if len(results) == 2:
        print()
        for k in keys:
            ratio = results[1][k] / results[0][k]
            print(f"{k}: python/gmpy2 = {ratio:.2f}x")


if __name__ == "__main__":
    main()
