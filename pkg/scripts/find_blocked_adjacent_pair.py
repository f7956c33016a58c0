#!/usr/bin/env python3
"""Search for an adjacent edge pair no plane Hamiltonian path can contain.

Two independent edges always sit on a common plane Hamiltonian path when
they do not cross, but for ADJACENT edges this can fail even at n=6.  This
script scans random geometric K6 instances, enumerates all plane
Hamiltonian paths once per instance, and reports the first (instance,
edge pair) where no path contains both edges.
"""

from __future__ import annotations

import argparse
import sys
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from convexham.drawing import canon_edge  # noqa: E402
from convexham.generators import random_geometric  # noqa: E402
from convexham.oracle import brute_hamiltonian  # noqa: E402


def blocked_pairs(d):
    paths = brute_hamiltonian(d, mode="paths_all")
    path_edges = [
        {canon_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1)} for seq in paths
    ]
    out = []
    for v in range(1, d.n + 1):
        others = [w for w in range(1, d.n + 1) if w != v]
        for a, b in combinations(others, 2):
            e, f = canon_edge(v, a), canon_edge(v, b)
            if not any(e in es and f in es for es in path_edges):
                out.append((e, f))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--budget", type=int, default=10_000)
    ap.add_argument("--all", action="store_true", help="list every hit, not just the first")
    args = ap.parse_args()

    for seed in range(args.budget):
        d = random_geometric(args.n, seed)
        hits = blocked_pairs(d)
        if hits:
            print(f"seed {seed}: {len(hits)} blocked adjacent pair(s)")
            for e, f in hits:
                print(f"  edges {e} and {f}: no plane hamiltonian path contains both")
            if not args.all:
                print(f"points: {[d.points[v] for v in range(1, args.n + 1)]}")
                return 0
    print(f"no blocked adjacent pair in {args.budget} instances at n={args.n}")
    return 1


if __name__ == "__main__":
    sys.exit(main())
