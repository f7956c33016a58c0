"""Command-line surface: generate, check, construct, verify, render, bench.

Drawings and certificates travel as JSON on stdin/stdout so commands compose
into shell pipelines; files only enter via explicit flags.  Every run writes
a manifest (command, input hash, seeds, versions, timing, oracle query
count) to stderr, keeping stdout byte-reproducible for equal inputs.

Exit codes: 0 ok, 1 domain error (structured JSON on stdout), 2 usage error.
The oracle enumeration cap honours the CONVEXHAM_MAX_BRUTE_N env var.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import __version__, generators, io
from .convexity import find_nonconvex_k5, find_nonconvex_triangle
from .drawing import instrumented
from .errors import (
    CertificateError,
    DrawingError,
    NoCoordinates,
    NotConvex,
    NotConvexEvidence,
)
from .hamiltonian import (
    empty_k_cycle,
    geometric_path_with_two_edges,
    hamiltonian_cycle,
    path_containing_edge,
    st_hamiltonian_path,
    star_avoiding_hamiltonian_cycle,
)
from .oracle import verify_certificate
from .render import render_svg
from .subdrawings import extend_cycle, greedy_maximal_plane


class UsageError(Exception):
    pass


def _dumps(obj):
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)


def _parse_edge(text):
    parts = text.replace("-", ",").split(",")
    if len(parts) != 2:
        raise UsageError(f"expected an edge like 'u,v', got {text!r}")
    try:
        u, v = int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"edge endpoints must be integers, got {text!r}") from None
    return (u, v)


def _parse_edges(text):
    return tuple(_parse_edge(part) for part in text.split(";") if part)


def _read_input(args):
    if getattr(args, "infile", None):
        with open(args.infile, "r", encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _load_drawing(args, manifest):
    raw = _read_input(args)
    manifest["input_hash"] = hashlib.sha256(raw.encode()).hexdigest()
    view, counter = instrumented(io.loads_drawing(raw))
    manifest["_counter"] = counter
    return view


def _load_certificate(path):
    if path == "-":
        return io.loads_certificate(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return io.loads_certificate(fh.read())


# ---------------------------------------------------------------- commands


def cmd_gen(args, manifest):
    if args.kind == "convex-position":
        d = generators.convex_position(args.n)
    elif args.kind == "twisted":
        d = generators.twisted(args.n)
    elif args.kind == "random":
        if args.seed is None:
            raise UsageError("gen random needs --seed")
        manifest["seeds"] = [args.seed]
        d = generators.random_geometric(args.n, args.seed)
    else:
        outer = _parse_edges(args.outer) if args.outer else ()
        d = generators.two_page(args.n, outer)
    return io.dumps_drawing(d)


def cmd_check_convex(args, manifest):
    d = _load_drawing(args, manifest)
    if args.method == "triangles":
        bad = find_nonconvex_triangle(d)
        witness = None
        if bad is not None:
            witness = {
                "triangle": list(bad.triangle),
                "violation_a": io._jsonify(bad.violation_a),
                "violation_b": io._jsonify(bad.violation_b),
            }
    else:
        bad = find_nonconvex_k5(d)
        witness = None
        if bad is not None:
            witness = {"vertices": list(bad.vertices), "class": bad.k5_class.name}
    return _dumps({"convex": bad is None, "method": args.method, "witness": witness})


def cmd_find(args, manifest):
    d = _load_drawing(args, manifest)
    verify = not args.no_verify
    task = args.task
    if task == "hc":
        cert = hamiltonian_cycle(d, verify=verify)
    elif task == "st-path":
        if args.s is None or args.t is None:
            raise UsageError("st-path needs --s and --t")
        cert = st_hamiltonian_path(d, args.s, args.t, verify=verify)
    elif task == "star-hc":
        if args.star is None:
            raise UsageError("star-hc needs --star")
        cert = star_avoiding_hamiltonian_cycle(d, args.star, verify=verify)
    elif task == "empty-cycle":
        if args.k is None or args.star is None:
            raise UsageError("empty-cycle needs --k and --star")
        cert = empty_k_cycle(d, args.k, args.star, verify=verify)
    elif task == "edge-path":
        if args.edge is None:
            raise UsageError("edge-path needs --edge u,v")
        cert = path_containing_edge(d, _parse_edge(args.edge), verify=verify)
    elif task == "two-edge-path":
        if args.edges is None:
            raise UsageError("two-edge-path needs --edges u,v;x,y")
        e, e2 = _require_two(_parse_edges(args.edges))
        if d.points is None:
            raise NoCoordinates("two-edge-path needs a drawing with coordinates")
        pts = [d.points[v] for v in range(1, d.n + 1)]
        cert = geometric_path_with_two_edges(pts, e, e2, verify=verify)
    else:  # max-plane as a find task: certificate only, pipeable into verify
        cert = _max_plane_sub(d, args).certificate()
        if verify:
            cert = verify_certificate(d, cert)
    return io.dumps_certificate(cert)


def _require_two(edges):
    if len(edges) != 2:
        raise UsageError(f"expected exactly two edges, got {len(edges)}")
    return edges


def _max_plane_sub(d, args):
    if getattr(args, "seed_cycle", False):
        return extend_cycle(d, hamiltonian_cycle(d, verify=False))
    return greedy_maximal_plane(d)


def cmd_max_plane(args, manifest):
    import random

    from .drawing import all_edges

    d = _load_drawing(args, manifest)
    bad = find_nonconvex_triangle(d)
    if bad is not None:
        raise NotConvex(
            f"maximal size is order-dependent on non-convex input; "
            f"triangle {bad.triangle} has no convex side"
        )
    sub = _max_plane_sub(d, args)
    out = {
        "size": len(sub),
        "edges": [list(e) for e in sorted(sub.edges)],
        "certificate": io.certificate_to_json(verify_certificate(d, sub.certificate())),
    }
    if args.trials:
        sizes = []
        for i in range(args.trials):
            order = all_edges(d.n)
            random.Random(i).shuffle(order)
            sizes.append(len(greedy_maximal_plane(d, order=order)))
        out["trial_sizes"] = sizes
        assert len(set(sizes)) == 1 and sizes[0] == out["size"], sizes
    return _dumps(out)


def cmd_verify(args, manifest):
    d = _load_drawing(args, manifest)
    if args.certfile:
        cert = _load_certificate(args.certfile)
    else:
        raise UsageError("verify needs --cert FILE (drawing comes from --in or stdin)")
    cert = verify_certificate(d, cert)
    claims = {k: io._jsonify(v) for k, v in cert.claims.items()}
    return _dumps({"verified": True, "kind": cert.kind, "claims": claims})


def cmd_render(args, manifest):
    d = _load_drawing(args, manifest)
    highlight = _load_certificate(args.highlight) if args.highlight else None
    return render_svg(d, highlight=highlight)


def cmd_bench(args, manifest):
    sizes = [int(s) for s in args.sizes.split(",") if s]
    manifest["seeds"] = list(range(args.seed, args.seed + args.reps))
    results = []
    total_queries = 0
    for n in sizes:
        for rep in range(args.reps):
            seed = args.seed + rep
            d = generators.random_geometric(n, seed)
            view, counter = instrumented(d)
            t0 = time.perf_counter()
            star_avoiding_hamiltonian_cycle(view, v_star=n, verify=False)
            ms = (time.perf_counter() - t0) * 1000.0
            total_queries += counter.count
            results.append(
                {
                    "n": n,
                    "seed": seed,
                    "queries": counter.count,
                    "ms": round(ms, 3),
                    "queries_per_n2": round(counter.count / (n * n), 4),
                }
            )
    slopes = []
    means = {n: _mean([r["queries"] for r in results if r["n"] == n]) for n in sizes}
    import math

    for a, b in zip(sizes, sizes[1:]):
        slopes.append(round(math.log(means[b] / means[a]) / math.log(b / a), 4))
    manifest["_queries"] = total_queries
    return _dumps({"task": "star-hc", "results": results, "slopes": slopes})


def _mean(xs):
    return sum(xs) / len(xs)


# ---------------------------------------------------------------- wiring


def _error_json(exc):
    obj = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, NotConvexEvidence):
        obj["which"] = exc.which
        obj["vertices"] = list(exc.vertices)
        obj["detail"] = exc.detail
    if isinstance(exc, CertificateError):
        obj["failed"] = list(exc.failed)
    return obj


def build_parser():
    parser = argparse.ArgumentParser(
        prog="convexham",
        description="Plane Hamiltonian structures in convex drawings of complete graphs.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gen", help="generate a drawing as JSON on stdout")
    p.add_argument("kind", choices=["convex-position", "twisted", "random", "two-page"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, help="for kind=random")
    p.add_argument("--outer", help="for kind=two-page: edges routed outside, 'u,v;x,y'")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check-convex", help="convexity verdict with witness")
    p.add_argument("--in", dest="infile", help="drawing JSON file (default stdin)")
    p.add_argument("--method", choices=["triangles", "k5"], default="triangles")
    p.set_defaults(func=cmd_check_convex)

    p = sub.add_parser("find", help="construct a certificate")
    p.add_argument(
        "task",
        choices=[
            "hc", "st-path", "star-hc", "empty-cycle",
            "edge-path", "two-edge-path", "max-plane",
        ],
    )
    p.add_argument("--in", dest="infile", help="drawing JSON file (default stdin)")
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--star", type=int, help="star vertex")
    p.add_argument("--k", type=int, help="cycle length for empty-cycle")
    p.add_argument("--edge", help="edge 'u,v' for edge-path")
    p.add_argument("--edges", help="two edges 'u,v;x,y' for two-edge-path")
    p.add_argument("--seed-cycle", action="store_true", dest="seed_cycle",
                   help="for max-plane: extend a Hamiltonian cycle")
    p.add_argument("--no-verify", action="store_true",
                   help="skip oracle verification (timing runs)")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("max-plane", help="maximal plane subdrawing (convex input only)")
    p.add_argument("--in", dest="infile", help="drawing JSON file (default stdin)")
    p.add_argument("--seed-cycle", action="store_true", dest="seed_cycle")
    p.add_argument("--trials", type=int, default=0,
                   help="re-run with k random greedy orders; sizes must agree")
    p.set_defaults(func=cmd_max_plane)

    p = sub.add_parser("verify", help="re-check a certificate against a drawing")
    p.add_argument("--in", dest="infile", help="drawing JSON file (default stdin)")
    p.add_argument("--cert", dest="certfile", help="certificate JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="SVG of a geometric drawing")
    p.add_argument("--in", dest="infile", help="drawing JSON file (default stdin)")
    p.add_argument("--highlight", help="certificate JSON file to highlight")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bench", help="oracle-query scaling of star-hc")
    p.add_argument("--sizes", default="250,500,1000,2000")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reps", type=int, default=1, help="seeds per size")
    p.set_defaults(func=cmd_bench)

    return parser


def _versions():
    import numpy

    return {
        "convexham": __version__,
        "python": sys.version.split()[0],
        "numpy": numpy.__version__,
    }


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    manifest = {
        "command": list(argv) if argv is not None else sys.argv[1:],
        "input_hash": None,
        "seeds": [],
        "versions": _versions(),
    }
    t0 = time.perf_counter()
    try:
        payload = args.func(args, manifest)
        code = 0
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DrawingError as exc:
        payload = _dumps(_error_json(exc))
        code = 1
    manifest["timing_ms"] = round((time.perf_counter() - t0) * 1000.0, 3)
    counter = manifest.pop("_counter", None)
    manifest["oracle_queries"] = manifest.pop("_queries", None) if counter is None else counter.count
    sys.stdout.write(payload if payload.endswith("\n") else payload + "\n")
    print(_dumps(manifest), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
