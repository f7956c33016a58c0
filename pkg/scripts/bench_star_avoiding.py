#!/usr/bin/env python3
"""Measure oracle-query growth of the star-avoiding cycle construction.

Runs the construction on random geometric instances at a doubling ladder
of sizes with an instrumented crossing oracle, prints per-size query
counts, queries/n^2, wall clock, and the log2 slope between consecutive
sizes.  Verification is timed separately so the construction's own cost
stays visible.
"""

from __future__ import annotations

import argparse
import sys
import time
from math import log2
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from convexham.drawing import instrumented  # noqa: E402
from convexham.generators import random_geometric  # noqa: E402
from convexham.hamiltonian import star_avoiding_hamiltonian_cycle  # noqa: E402
from convexham.oracle import verify_certificate  # noqa: E402


def run(sizes, reps, seed_base, verify):
    rows = []
    for n in sizes:
        for rep in range(reps):
            d = random_geometric(n, seed_base + rep)
            view, counter = instrumented(d)
            t0 = time.perf_counter()
            cert = star_avoiding_hamiltonian_cycle(view, v_star=n, verify=False)
            build = time.perf_counter() - t0
            check = None
            if verify:
                t0 = time.perf_counter()
                verify_certificate(d, cert)
                check = time.perf_counter() - t0
            rows.append((n, rep, counter.count, build, check))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="250,500,1000,2000")
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--seed-base", type=int, default=0)
    ap.add_argument("--verify", action="store_true", help="also time verification")
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    rows = run(sizes, args.reps, args.seed_base, args.verify)
    print(f"{'n':>6} {'rep':>3} {'queries':>12} {'q/n^2':>7} {'build_s':>8} {'verify_s':>9}")
    for n, rep, q, build, check in rows:
        chk = f"{check:9.3f}" if check is not None else f"{'-':>9}"
        print(f"{n:6d} {rep:3d} {q:12d} {q / n**2:7.3f} {build:8.3f} {chk}")

    mean_q = {n: sum(r[2] for r in rows if r[0] == n) / args.reps for n in sizes}
    for a, b in zip(sizes, sizes[1:]):
        print(f"slope {a}->{b}: {log2(mean_q[b] / mean_q[a]):.4f}")


if __name__ == "__main__":
    main()
