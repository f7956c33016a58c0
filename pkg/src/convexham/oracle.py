"""Independent verification: exhaustive search and direct re-checking.

Everything here answers questions by brute force or by first principles on
the crossing oracle alone.  This module must stay free of imports from the
construction modules so that certificate verification is independent of the
code being verified.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations

from .certificates import Certificate, mark_verified
from .drawing import Drawing, all_edges, canon_edge
from .errors import (
    CertificateError,
    CycleNotPlane,
    NoCoordinates,
    SideInconsistency,
    TooLarge,
)
from . import geometry

_ENV_CAP = "CONVEXHAM_MAX_BRUTE_N"
_DEFAULT_BRUTE_N = 12


def max_brute_n():
    """Size cap for exhaustive search, overridable via CONVEXHAM_MAX_BRUTE_N."""
    raw = os.environ.get(_ENV_CAP)
    if raw is None:
        return _DEFAULT_BRUTE_N
    return int(raw)


def _require_small(n, cap):
    if n > cap:
        raise TooLarge(
            f"n={n} exceeds the exhaustive-search cap {cap} "
            f"(override with {_ENV_CAP})"
        )


def first_crossing(d, edges):
    """First pair of the given edges that cross, or None.  Row queries."""
    edges = [canon_edge(*e) for e in edges]
    for i in range(len(edges) - 1):
        a, b = edges[i]
        rest = edges[i + 1 :]
        cs = [e[0] for e in rest]
        ds = [e[1] for e in rest]
        hits = d.cross_pairs(a, b, cs, ds)
        for j, hit in enumerate(hits):
            if hit:
                return (edges[i], rest[j])
    return None


def is_plane(d, edges):
    """True iff no two of the given edges cross."""
    return first_crossing(d, edges) is None


@dataclass(frozen=True)
class CycleSides:
    """Off-cycle vertices split by a plane cycle.

    Two vertices share a side iff the edge between them crosses the cycle an
    even number of times.  side_a holds the class of the smallest off-cycle
    vertex; an empty side is always side_b.
    """

    cycle: tuple
    side_a: frozenset
    side_b: frozenset


def _cycle_edge_parity(d, w, w2, cycle_edges):
    a, b = canon_edge(w, w2)
    cs = [e[0] for e in cycle_edges]
    ds = [e[1] for e in cycle_edges]
    return int(sum(bool(h) for h in d.cross_pairs(a, b, cs, ds))) % 2


def cycle_sides(d, cycle):
    """Partition vertices off a plane cycle into its two sides.

    Raises CycleNotPlane if the cycle's own edges cross, SideInconsistency
    if the parity relation fails to be a well-defined 2-colouring (possible
    only for non-plane input; checked exhaustively here because this is the
    oracle).
    """
    cyc = tuple(cycle)
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise ValueError(f"not a cycle: {cyc}")
    if any(v < 1 or v > d.n for v in cyc):
        raise ValueError(f"vertices out of range 1..{d.n}: {cyc}")
    cycle_edges = [canon_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]
    bad = first_crossing(d, cycle_edges)
    if bad is not None:
        raise CycleNotPlane(f"cycle edges {bad[0]} and {bad[1]} cross")
    off = sorted(set(range(1, d.n + 1)) - set(cyc))
    if not off:
        return CycleSides(cyc, frozenset(), frozenset())
    ref = off[0]
    same = [ref]
    other = []
    parity = {ref: 0}
    for w in off[1:]:
        p = _cycle_edge_parity(d, ref, w, cycle_edges)
        parity[w] = p
        (same if p == 0 else other).append(w)
    # The 2-colouring must be consistent for every pair, not just pairs
    # through the reference vertex.
    for i, w in enumerate(off):
        for w2 in off[i + 1 :]:
            p = _cycle_edge_parity(d, w, w2, cycle_edges)
            if p != (parity[w] ^ parity[w2]):
                raise SideInconsistency(
                    f"vertices {w},{w2} disagree with sides of cycle {cyc}"
                )
    return CycleSides(cyc, frozenset(same), frozenset(other))


def polygon_partition(d, cycle):
    """Geometric cross-check of cycle sides via exact point-in-polygon.

    Only for drawings carrying coordinates.  Returns (inside, outside) as
    frozensets of off-cycle vertices.
    """
    if d.points is None:
        raise NoCoordinates("drawing has no coordinates")
    cyc = tuple(cycle)
    poly = [d.points[v] for v in cyc]
    inside, outside = set(), set()
    for w in range(1, d.n + 1):
        if w in set(cyc):
            continue
        if geometry.polygon_side(poly, d.points[w]):
            inside.add(w)
        else:
            outside.add(w)
    return frozenset(inside), frozenset(outside)


def _plane_seq_extender(d, seq, seq_edges, x, extra_edge_check=None):
    """Edge from seq[-1] to x, checked against existing edges (and extras)."""
    e = canon_edge(seq[-1], x)
    for f in seq_edges:
        if not set(e) & set(f) and d.crosses(e, f):
            return None
    if extra_edge_check is not None and not extra_edge_check(e):
        return None
    return e


def _star_ok(d, v_star, e):
    if v_star in e:
        return True
    for w in range(1, d.n + 1):
        if w == v_star or w in e:
            continue
        if d.crosses(e, (v_star, w)):
            return False
    return True


def brute_hamiltonian(d, mode="cycle", s=None, t=None, v_star=None, edge=None, cap=None):
    """Exhaustively enumerate plane Hamiltonian structures.

    mode="cycle": all plane Hamiltonian cycles, canonical form (starts at 1,
    second vertex smaller than last).
    mode="path": all plane Hamiltonian paths from s to t.
    mode="star_avoiding": plane Hamiltonian cycles none of whose edges cross
    an edge at v_star (cycle edges at v_star are exempt as always).
    mode="contains": all plane Hamiltonian paths (canonical: first < last)
    whose edge set contains `edge`.
    mode="paths_all": all plane Hamiltonian paths, canonical as above.

    Refuses n above the cap (default from CONVEXHAM_MAX_BRUTE_N).
    """
    n = d.n
    _require_small(n, max_brute_n() if cap is None else cap)
    results = []

    if mode in ("cycle", "star_avoiding"):
        if mode == "star_avoiding":
            if v_star is None or not 1 <= v_star <= n:
                raise ValueError(f"v_star required in 1..{n}")
            extra = lambda e: _star_ok(d, v_star, e)  # noqa: E731
        else:
            extra = None
        seq = [1]

        def close_cycle():
            # Adjacent edges (first and last of the path) are skipped inside
            # the extender as always.
            e = _plane_seq_extender(d, seq, edges_acc, 1, extra)
            if e is None:
                return
            if seq[1] < seq[-1]:
                results.append(tuple(seq))

        edges_acc = []

        def rec_cycle():
            if len(seq) == n:
                close_cycle()
                return
            for x in range(2, n + 1):
                if x in seen:
                    continue
                e = _plane_seq_extender(d, seq, edges_acc, x, extra)
                if e is None:
                    continue
                seq.append(x)
                seen.add(x)
                edges_acc.append(e)
                rec_cycle()
                edges_acc.pop()
                seen.remove(x)
                seq.pop()

        seen = {1}
        rec_cycle()

    elif mode == "path":
        if s is None or t is None or s == t:
            raise ValueError("mode='path' needs distinct s and t")
        if not (1 <= s <= n and 1 <= t <= n):
            raise ValueError(f"endpoints out of range 1..{n}")
        seq = [s]
        edges_acc = []
        seen = {s}

        def rec_path():
            if len(seq) == n:
                if seq[-1] == t:
                    results.append(tuple(seq))
                return
            for x in range(1, n + 1):
                if x in seen or (x == t and len(seq) < n - 1):
                    continue
                e = _plane_seq_extender(d, seq, edges_acc, x)
                if e is None:
                    continue
                seq.append(x)
                seen.add(x)
                edges_acc.append(e)
                rec_path()
                edges_acc.pop()
                seen.remove(x)
                seq.pop()

        rec_path()

    elif mode in ("contains", "paths_all"):
        want = canon_edge(*edge) if mode == "contains" else None

        for start in range(1, n + 1):
            seq = [start]
            edges_acc = []
            seen = {start}

            def rec_free():
                if len(seq) == n:
                    if seq[0] < seq[-1]:
                        if want is None or want in edges_acc:
                            results.append(tuple(seq))
                    return
                for x in range(1, n + 1):
                    if x in seen:
                        continue
                    e = _plane_seq_extender(d, seq, edges_acc, x)
                    if e is None:
                        continue
                    seq.append(x)
                    seen.add(x)
                    edges_acc.append(e)
                    rec_free()
                    edges_acc.pop()
                    seen.remove(x)
                    seq.pop()

            rec_free()
    else:
        raise ValueError(f"unknown mode {mode!r}")

    return sorted(results)


def exact_max_plane(d, cap=8):
    """Maximum number of pairwise non-crossing edges, by branch and bound.

    The crossing graph on the C(n,2) edges is small for n <= 8; this is a
    plain maximum-independent-set search with a popcount bound.
    """
    _require_small(d.n, cap)
    edges = all_edges(d.n)
    m = len(edges)
    conflict = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            e, f = edges[i], edges[j]
            if not set(e) & set(f) and d.crosses(e, f):
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i
    best = 0
    full = (1 << m) - 1

    def rec(cand, size):
        nonlocal best
        if size + bin(cand).count("1") <= best:
            return
        if cand == 0:
            best = max(best, size)
            return
        v = (cand & -cand).bit_length() - 1
        rec(cand & ~conflict[v] & ~(1 << v), size + 1)
        rec(cand & ~(1 << v), size)

    rec(full, 0)
    return best


def count_empty_triangles(d):
    """Number of triangles with all remaining vertices on one side.

    A side is empty iff every off-triangle vertex has even crossing parity
    with the smallest off-triangle vertex, i.e. the parity class of the
    reference vertex absorbs everything.
    """
    n = d.n
    count = 0
    for tri in combinations(range(1, n + 1), 3):
        off = [v for v in range(1, n + 1) if v not in tri]
        if not off:
            count += 1
            continue
        a, b, c = tri
        tri_edges = ((a, b), (b, c), (a, c))
        ref = off[0]
        empty = True
        for w in off[1:]:
            par = sum(d.cross4(ref, w, *te) for te in tri_edges) % 2
            if par:
                empty = False
                break
        if empty:
            count += 1
    return count


def _check_star_avoiding(d, cert, v_star):
    if v_star not in cert.vertices:
        return False
    for e in cert.edges:
        if v_star in e:
            continue
        a, b = e
        cs = [w for w in range(1, d.n + 1) if w != v_star and w not in e]
        if cs and any(d.cross_pairs(a, b, cs, v_star)):
            return False
    return True


def verify_certificate(d, cert):
    """Re-check every claim of a certificate against the drawing.

    Returns a verified copy; raises CertificateError naming the failed
    claims otherwise.  Unknown claim names fail loudly rather than pass
    silently.
    """
    failed = []
    if any(v < 1 or v > d.n for v in cert.vertices):
        raise CertificateError(f"vertices out of range 1..{d.n}", failed=("structure",))
    for name, value in cert.claims.items():
        if name == "plane":
            ok = (not value) or is_plane(d, cert.edges)
        elif name == "hamiltonian":
            ok = (not value) or set(cert.vertices) == set(range(1, d.n + 1))
        elif name == "star_avoiding":
            ok = _check_star_avoiding(d, cert, value)
        elif name == "empty_side":
            if not value:
                ok = True
            else:
                sides = cycle_sides(d, cert.vertices)
                ok = min(len(sides.side_a), len(sides.side_b)) == 0
        elif name == "contains":
            have = set(cert.edges)
            ok = all(canon_edge(*e) in have for e in value)
        elif name == "endpoints":
            s, t = value
            ok = cert.vertices[0] == s and cert.vertices[-1] == t
        elif name == "maximal_plane":
            if not value:
                ok = True
            else:
                have = set(cert.edges)
                ok = is_plane(d, cert.edges)
                if ok:
                    for e in all_edges(d.n):
                        if e in have:
                            continue
                        if is_plane(d, list(have) + [e]):
                            ok = False
                            break
        else:
            raise CertificateError(f"unknown claim {name!r}", failed=(name,))
        if not ok:
            failed.append(name)
    if failed:
        raise CertificateError(
            f"certificate claims failed: {', '.join(sorted(failed))}",
            failed=tuple(sorted(failed)),
        )
    return mark_verified(cert)
