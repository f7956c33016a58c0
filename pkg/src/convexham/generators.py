"""Drawing generators: geometric point sets and the twisted family.

Geometric drawings use exact integer predicates throughout, so every
generated drawing is simple by construction.  The twisted family is the
standard non-convex counterexample stock: its crossing rule is interval
containment, realised by the log-spiral construction (every edge winds once
around a centre; see tests for a polyline cross-validation).
"""

from __future__ import annotations

import random

from . import geometry
from .drawing import Drawing, geometric_drawing, new_drawing
from .errors import DegeneratePointSet, ExhaustedRejection, TooFewVertices

# Retry budget for rejection sampling in random_geometric.
_MAX_TRIES = 64


def point_set(points):
    """Validate a point sequence: integer coords, >= 3 points, general position."""
    pts = []
    for p in points:
        x, y = p
        if not isinstance(x, int) or not isinstance(y, int):
            raise ValueError(f"coordinates must be integers, got {p!r}")
        pts.append((x, y))
    if len(pts) < 3:
        raise TooFewVertices(f"need >= 3 points, got {len(pts)}")
    geometry.assert_general_position(pts)
    return tuple(pts)


def geometric(points):
    """Drawing of K_n with vertices at the given points and straight edges.

    Vertex i+1 sits at points[i].  Rotations are the counterclockwise
    angular orders; crossings are answered lazily by exact segment tests.
    """
    pts = point_set(points)
    return geometric_drawing((None,) + pts, skip_checks=True)


def convex_position(n):
    """Drawing of n points in strictly convex position (rounded circle).

    The radius grows until rounding neither merges points, creates a
    collinear triple, nor bends the polygon; labels follow the hull
    counterclockwise.
    """
    if n < 3:
        raise TooFewVertices(f"need n >= 3, got {n}")
    import math

    radius = max(64, 2 * n * n)
    while True:
        pts = []
        for k in range(n):
            ang = 2 * math.pi * k / n
            pts.append((round(radius * math.cos(ang)), round(radius * math.sin(ang))))
        try:
            validated = point_set(pts)
        except DegeneratePointSet:
            radius *= 2
            continue
        if geometry.strictly_convex_ccw(validated):
            return geometric(validated)
        radius *= 2


def random_geometric(n, seed):
    """Uniform integer points in a box scaled so degeneracies are rare.

    Uses the stdlib Mersenne Twister (`random.Random(seed)`); resamples the
    whole set on a degenerate draw and raises ExhaustedRejection after a
    fixed retry budget.
    """
    if n < 3:
        raise TooFewVertices(f"need n >= 3, got {n}")
    rng = random.Random(seed)
    side = max(10**4, 8 * n**3)
    for _ in range(_MAX_TRIES):
        pts = [(rng.randrange(side + 1), rng.randrange(side + 1)) for _ in range(n)]
        try:
            return geometric(pts)
        except DegeneratePointSet:
            continue
    raise ExhaustedRejection(
        f"no general-position sample for n={n}, seed={seed} in {_MAX_TRIES} tries"
    )


def twisted(n):
    """The twisted drawing of K_n: edges cross iff one label interval strictly contains the other.

    Vertices sit on a ray ordered by label; every edge spirals once around
    the ray's origin, so log-radius profiles are linear in the winding angle
    and two edges meet exactly when their label intervals nest.  The
    rotation of vertex i reads (n, n-1, ..., i+1, 1, 2, ..., i-1).
    """
    if n < 3:
        raise TooFewVertices(f"need n >= 3, got {n}")
    rotations = []
    for i in range(1, n + 1):
        rotations.append(tuple(range(n, i, -1)) + tuple(range(1, i)))
    crossings = []
    for a in range(1, n + 1):
        for b in range(a + 3, n + 1):
            for c in range(a + 1, b):
                for dd in range(c + 1, b):
                    crossings.append(((a, b), (c, dd)))
    return new_drawing(n, rotations, crossings)


def two_page(n, outer_edges=()):
    """Book drawing: vertices on a circle, each edge inside or outside the disk.

    Every page assignment yields a realizable simple drawing (two chord
    systems glued along the circle): same-page edges cross iff their label
    intervals interleave, different pages never cross.  Rotations follow
    from the two-disk picture: at v the inside neighbours sweep v+1..v-1,
    then the outside neighbours sweep back v-1..v+1.

    With no outer edges this is combinatorially convex_position(n).  With a
    few long outer chords it produces convex drawings that are not
    stretchable to points, including hubs with several bad edges; that is
    the stock this family exists to supply.
    """
    if n < 3:
        raise TooFewVertices(f"need n >= 3, got {n}")
    outer = set()
    for e in outer_edges:
        u, w = e
        if u == w or not (1 <= u <= n and 1 <= w <= n):
            raise ValueError(f"bad edge {e!r}")
        outer.add((u, w) if u < w else (w, u))

    def inside(u, w):
        return ((u, w) if u < w else (w, u)) not in outer

    rotations = []
    for v in range(1, n + 1):
        cyc = [(v + k - 1) % n + 1 for k in range(1, n)]
        rotations.append(
            tuple(w for w in cyc if inside(v, w))
            + tuple(w for w in reversed(cyc) if not inside(v, w))
        )
    crossings = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            for c in range(a + 1, b):
                for dd in range(b + 1, n + 1):
                    if inside(a, b) == inside(c, dd):
                        crossings.append(((a, b), (c, dd)))
    return new_drawing(n, rotations, crossings)


def spiral_polylines(n, steps=360):
    """Float polylines of the twisted drawing's log-spiral edges (for cross-checks).

    Edge {a, b} is the curve r(t) = r_a * (r_b / r_a)**t, angle 2*pi*t, for
    t in [0, 1], with r_i = 2**i.  Returns {edge: [(x, y), ...]}.
    """
    import math

    curves = {}
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            pts = []
            for s in range(steps + 1):
                t = s / steps
                r = 2.0 ** (a + (b - a) * t)
                ang = 2 * math.pi * t
                pts.append((r * math.cos(ang), r * math.sin(ang)))
            curves[(a, b)] = pts
    return curves
