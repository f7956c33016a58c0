import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from convexham import generators
from convexham.errors import DegeneratePointSet
from convexham.geometry import (
    PointBack,
    assert_general_position,
    ccw_order,
    orientation,
    polygon_side,
    segments_cross,
    strictly_convex_ccw,
)

coord = st.integers(-1000, 1000)
point = st.tuples(coord, coord)


def test_orientation_signs():
    assert orientation((0, 0), (1, 0), (0, 1)) == 1
    assert orientation((0, 0), (0, 1), (1, 0)) == -1
    assert orientation((0, 0), (1, 1), (2, 2)) == 0


@given(point, point, point)
def test_orientation_antisymmetry(a, b, c):
    assert orientation(a, b, c) == -orientation(b, a, c) == orientation(b, c, a)


def test_segments_cross_basic():
    assert segments_cross((0, 0), (2, 2), (0, 2), (2, 0))
    # Shared endpoint: touching, not crossing.
    assert not segments_cross((0, 0), (2, 2), (0, 0), (2, 0))
    # Disjoint.
    assert not segments_cross((0, 0), (1, 0), (0, 5), (1, 5))
    # One endpoint on the other segment's line but outside it.
    assert not segments_cross((0, 0), (2, 2), (3, 3), (5, 0))


@given(point, point, point, point)
def test_segments_cross_symmetry(a, b, c, d):
    assert segments_cross(a, b, c, d) == segments_cross(c, d, a, b)
    assert segments_cross(a, b, c, d) == segments_cross(b, a, d, c)


def test_general_position_accepts():
    assert_general_position([(0, 0), (5, 1), (2, 7), (9, 4)])


def test_general_position_duplicate():
    with pytest.raises(DegeneratePointSet):
        assert_general_position([(0, 0), (1, 2), (0, 0)])


def test_general_position_collinear():
    with pytest.raises(DegeneratePointSet):
        assert_general_position([(0, 0), (1, 1), (3, 3), (5, 2)])


def test_ccw_order_compass():
    pts = (None, (0, 0), (10, 1), (1, 10), (-10, 2), (-1, -10))
    order = ccw_order(pts, 1, [2, 3, 4, 5])
    # Starting vertex is unspecified; the cyclic order is fixed.
    i = order.index(2)
    assert order[i:] + order[:i] == [2, 3, 4, 5]


def test_strictly_convex_ccw():
    square = [(0, 0), (4, 0), (4, 4), (0, 4)]
    assert strictly_convex_ccw(square)
    assert not strictly_convex_ccw(square[::-1])  # clockwise
    assert not strictly_convex_ccw([(0, 0), (4, 0), (1, 1), (0, 4)])  # reflex


def test_polygon_side_triangle():
    tri = [(0, 0), (10, 0), (0, 10)]
    assert polygon_side(tri, (1, 1)) == 1
    assert polygon_side(tri, (9, 9)) == 0
    assert polygon_side(tri, (-1, 5)) == 0


@given(st.integers(0, 500))
def test_polygon_side_matches_orientation_on_triangles(seed):
    # For a ccw triangle, inside == all three orientations positive.
    d = generators.random_geometric(6, seed)
    pts = d.points
    a, b, c = pts[1], pts[2], pts[3]
    if orientation(a, b, c) < 0:
        a, b = b, a
    for w in (4, 5, 6):
        p = pts[w]
        expected = (
            orientation(a, b, p) > 0
            and orientation(b, c, p) > 0
            and orientation(c, a, p) > 0
        )
        assert polygon_side([a, b, c], p) == int(expected)


@given(st.integers(4, 12), st.integers(0, 300))
def test_pointback_rows_match_scalar_predicate(n, seed):
    d = generators.random_geometric(n, seed)
    back = PointBack(d.points)
    pts = d.points
    for a in range(1, n):
        b = a % n + 1
        if a == b:
            continue
        others = [(c, dd) for c in range(1, n + 1) for dd in range(c + 1, n + 1)]
        cs = np.array([c for c, _ in others])
        ds = np.array([dd for _, dd in others])
        rows = back.cross_pairs(min(a, b), max(a, b), cs, ds)
        for (c, dd), got in zip(others, rows):
            if c in (a, b) or dd in (a, b):
                assert not got
            else:
                assert got == segments_cross(pts[a], pts[b], pts[c], pts[dd])


def test_pointback_exact_fallback_huge_coords():
    # Beyond the float-safe window every row must fall back to integers.
    big = 2**60
    pts = (None, (0, 0), (big, 1), (1, big), (big, big - 3))
    back = PointBack(pts)
    assert not back.float_ok
    rows = back.cross_pairs(1, 4, np.array([2]), np.array([3]))
    assert rows[0] == segments_cross(pts[1], pts[4], pts[2], pts[3])
