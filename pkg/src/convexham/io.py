"""JSON serialisation of drawings and certificates.

The drawing format is a bit-exact contract:

    {"n": int,
     "rotations": [[int, ...], ...],        # rotations[i] = ccw order around vertex i+1
     "crossings": [[[u, v], [x, y]], ...],  # omitted when "points" is present
     "points": [[x, y], ...]}               # optional, integers

Writers emit canonical form: each rotation starts at its smallest label,
edges are (min, max), crossing pairs are sorted lexicographically, keys are
sorted and the encoding is compact.  Identical drawings therefore serialise
to identical bytes.

Readers treat "points" as authoritative.  Redundant fields are checked
against the coordinates where that is affordable: rotations up to n = 64,
stored crossings exhaustively up to n = 12 and pair-by-pair beyond.
"""

from __future__ import annotations

import json

from .drawing import canon_edge, new_drawing
from .errors import FormatError
from .generators import geometric

_DRAWING_KEYS = {"n", "rotations", "crossings", "points"}
_CERT_KEYS = {"kind", "vertices", "edges", "claims", "oracle_verified"}

# Redundancy-check budgets for geometric inputs that also carry the
# derivable fields.  Beyond these, the coordinates alone are trusted.
_ROTATION_CHECK_MAX_N = 64
_CROSSING_CHECK_MAX_N = 12


def drawing_to_json(d):
    """Canonical JSON-ready dict for a drawing.

    Geometric drawings carry their points; the crossing list is redundant
    then and only written while small enough to double as a cross-check.
    """
    obj = {
        "n": d.n,
        "rotations": [list(d.rotation_of(v)) for v in range(1, d.n + 1)],
    }
    if d.points is not None:
        obj["points"] = [list(d.points[v]) for v in range(1, d.n + 1)]
        if d.n > _CROSSING_CHECK_MAX_N:
            return obj
    obj["crossings"] = [[list(e), list(f)] for e, f in sorted(d.crossing_set())]
    return obj


def dumps_drawing(d):
    return json.dumps(drawing_to_json(d), separators=(",", ":"), sort_keys=True)


def _require(cond, message):
    if not cond:
        raise FormatError(message)


def _int_pair(x, what):
    _require(
        isinstance(x, (list, tuple)) and len(x) == 2
        and all(isinstance(c, int) and not isinstance(c, bool) for c in x),
        f"{what} must be a pair of integers, got {x!r}",
    )
    return (x[0], x[1])


def drawing_from_json(obj):
    """Parse and validate a drawing dict (as produced by drawing_to_json)."""
    _require(isinstance(obj, dict), f"drawing JSON must be an object, got {type(obj).__name__}")
    extra = set(obj) - _DRAWING_KEYS
    _require(not extra, f"unknown drawing keys: {sorted(extra)}")
    n = obj.get("n")
    _require(isinstance(n, int) and not isinstance(n, bool), "field 'n' must be an integer")
    rotations = obj.get("rotations")
    _require(isinstance(rotations, list), "field 'rotations' must be a list")
    _require(
        all(isinstance(r, list) and all(isinstance(u, int) for u in r) for r in rotations),
        "each rotation must be a list of integers",
    )

    points = obj.get("points")
    if points is not None:
        _require(isinstance(points, list), "field 'points' must be a list")
        _require(len(points) == n, f"expected {n} points, got {len(points)}")
        d = geometric([_int_pair(p, "point") for p in points])
        _require(len(rotations) == n, f"expected {n} rotations, got {len(rotations)}")
        if n <= _ROTATION_CHECK_MAX_N:
            for v in range(1, n + 1):
                stored = tuple(rotations[v - 1])
                derived = d.rotation_of(v)
                if stored != derived:
                    raise FormatError(
                        f"stored rotation of vertex {v} disagrees with the points: "
                        f"{stored} vs {derived}"
                    )
        crossings = obj.get("crossings")
        if crossings is not None:
            stored = _crossing_pairs(crossings, n)
            if n <= _CROSSING_CHECK_MAX_N:
                derived = d.crossing_set()
                if stored != derived:
                    raise FormatError(
                        "stored crossings disagree with the points "
                        f"(e.g. {sorted(stored ^ derived)[:3]})"
                    )
            else:
                for e, f in stored:
                    if not d.crosses(e, f):
                        raise FormatError(
                            f"stored crossing {e} x {f} contradicts the points"
                        )
        return d

    crossings = obj.get("crossings")
    _require(crossings is not None, "abstract drawings need a 'crossings' field")
    return new_drawing(n, [tuple(r) for r in rotations], _crossing_pairs(crossings, n))


def _crossing_pairs(crossings, n):
    _require(isinstance(crossings, list), "field 'crossings' must be a list")
    pairs = set()
    for item in crossings:
        _require(
            isinstance(item, list) and len(item) == 2,
            f"each crossing must be a pair of edges, got {item!r}",
        )
        e = canon_edge(*_int_pair(item[0], "edge"))
        f = canon_edge(*_int_pair(item[1], "edge"))
        pairs.add((e, f) if e <= f else (f, e))
    return frozenset(pairs)


def loads_drawing(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    return drawing_from_json(obj)


def _jsonify(value):
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    if isinstance(value, (frozenset, set)):
        return sorted(_jsonify(v) for v in value)
    return value


def _tupleify(value):
    if isinstance(value, list):
        return tuple(_tupleify(v) for v in value)
    return value


def certificate_to_json(cert):
    return {
        "kind": cert.kind,
        "vertices": list(cert.vertices),
        "edges": [list(e) for e in cert.edges],
        "claims": {k: _jsonify(v) for k, v in cert.claims.items()},
        "oracle_verified": cert.oracle_verified,
    }


def dumps_certificate(cert):
    return json.dumps(certificate_to_json(cert), separators=(",", ":"), sort_keys=True)


def certificate_from_json(obj):
    """Parse a certificate dict; the stored edges must match the vertex sequence."""
    _require(isinstance(obj, dict), "certificate JSON must be an object")
    extra = set(obj) - _CERT_KEYS
    _require(not extra, f"unknown certificate keys: {sorted(extra)}")
    kind = obj.get("kind")
    _require(kind in ("cycle", "path", "subdrawing"), f"unknown certificate kind {kind!r}")
    vertices = obj.get("vertices")
    _require(
        isinstance(vertices, list) and all(isinstance(v, int) for v in vertices),
        "field 'vertices' must be a list of integers",
    )
    edges = obj.get("edges")
    _require(isinstance(edges, list), "field 'edges' must be a list")
    edges = tuple(canon_edge(*_int_pair(e, "edge")) for e in edges)
    claims = obj.get("claims", {})
    _require(isinstance(claims, dict), "field 'claims' must be an object")
    verified = obj.get("oracle_verified", False)
    _require(isinstance(verified, bool), "field 'oracle_verified' must be a boolean")

    from .certificates import cycle_certificate, path_certificate, subdrawing_certificate

    claims = {k: _tupleify(v) for k, v in claims.items()}
    try:
        if kind == "cycle":
            cert = cycle_certificate(vertices, claims, verified)
        elif kind == "path":
            cert = path_certificate(vertices, claims, verified)
        else:
            cert = subdrawing_certificate(edges, claims, verified)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if kind == "subdrawing":
        if tuple(vertices) != cert.vertices:
            raise FormatError(
                f"stored vertices {vertices} disagree with the edge set's {list(cert.vertices)}"
            )
    elif set(edges) != set(cert.edges):
        raise FormatError("stored edges disagree with the vertex sequence")
    return cert


def loads_certificate(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    return certificate_from_json(obj)
