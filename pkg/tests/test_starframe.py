import pytest
from hypothesis import given
from hypothesis import strategies as st

from convexham import generators
from convexham.drawing import instrumented
from convexham.errors import NotConvexEvidence, TooFewVertices
from convexham.starframe import build_star_frame

# Convex two-page drawings whose frames have several bad edges; the plain
# geometric generators never produce m >= 2 (a straight-line star leaves at
# most one angular gap wide enough).
MULTI_BAD = [
    (6, ((1, 4),)),
    (7, ((2, 5),)),
    (8, ((1, 4), (4, 7), (7, 8))),
    (9, ((1, 6), (2, 4), (7, 9))),
    (10, ((2, 4), (2, 10), (4, 8))),
    (12, ((4, 9), (4, 12), (7, 9), (9, 12))),
]


def _frames(d):
    return [build_star_frame(d, h) for h in range(1, d.n + 1)]


def test_worked_example_pentagon_hub5():
    frame = build_star_frame(generators.convex_position(5), 5)
    assert frame.m == 1
    assert frame.bad_host() == ((1, 4),)
    # With one bad edge the relabeling parks it on the wrap pair.
    assert frame.bad == ((4, 1),)
    assert [sorted(frame.to_host[w] for w in ws) for ws in frame.witnesses] == [[2, 3]]


@pytest.mark.parametrize("n", range(4, 10))
def test_convex_position_every_hub_one_bad_edge(n):
    # Around hub h the only bad edge joins its hull neighbours, and every
    # other vertex witnesses it.
    d = generators.convex_position(n)
    for h in range(1, n + 1):
        frame = build_star_frame(d, h)
        assert frame.m == 1
        lo, hi = sorted(((h - 2) % n + 1, h % n + 1))
        assert frame.bad_host() == ((lo, hi),)
        wit_hosts = {frame.to_host[w] for w in frame.witnesses[0]}
        assert wit_hosts == set(range(1, n + 1)) - {h, lo, hi}


def test_triangle_has_no_bad_edges():
    frame = build_star_frame(generators.convex_position(3), 2)
    assert frame.m == 0 and frame.l_table == {}


def test_multi_bad_instances_build():
    ms = []
    for n, outer in MULTI_BAD:
        d = generators.two_page(n, outer)
        ms.append(max(f.m for f in _frames(d)))
    assert min(ms) >= 2
    assert max(ms) >= 3  # the crafted K8 drives a three-bad-edge hub


def test_deep_frame_frozen_values():
    d = generators.two_page(12, {(4, 9), (4, 12), (7, 9), (9, 12)})
    frame = build_star_frame(d, 12)
    assert frame.m == 2
    assert frame.bad == ((8, 9), (10, 11))
    assert frame.witnesses == (frozenset({7}), frozenset({1, 2}))
    assert frame.blocks_left == ((3, 4, 5, 6),)
    assert frame.blocks_right == ((9, 10),)
    # One entry found by probing, one falling back to the default.
    assert frame.l_table == {9: 6, 10: 2}


def _brute_l_table(d, frame):
    """Reference connector table, straight from the definition."""
    v_star = frame.to_host[d.n]
    got = {}
    for i, (left, right) in enumerate(zip(frame.blocks_left, frame.blocks_right)):
        default = max(frame.witnesses[i + 1])
        for r in right:
            best = default
            for l in left:
                below = [x for x in left if x < l]
                if any(
                    d.crosses(
                        (frame.to_host[x], frame.to_host[r]),
                        (frame.to_host[l], v_star),
                    )
                    for x in below
                ):
                    best = max(best, l)
            got[r] = best
    return got


@pytest.mark.parametrize("n,outer", MULTI_BAD)
def test_l_table_matches_bruteforce(n, outer):
    d = generators.two_page(n, outer)
    checked = 0
    for frame in _frames(d):
        if frame.m < 2:
            continue
        assert frame.l_table == _brute_l_table(d, frame)
        checked += 1
    assert checked


@pytest.mark.parametrize("n,outer", MULTI_BAD)
def test_frame_structure_invariants(n, outer):
    d = generators.two_page(n, outer)
    for frame in _frames(d):
        k = n - 1
        # Bijection between host and frame labels, hub pinned at n.
        assert sorted(frame.to_host[1:]) == list(range(1, n + 1))
        assert all(frame.to_frame[frame.to_host[f]] == f for f in range(1, n + 1))
        assert frame.to_host[n] == frame.v_star
        # Relabeling is a rotation of the hub's rotation order.
        rot = d.rotation_of(frame.v_star)
        ring = tuple(frame.to_host[1 : n])
        i = rot.index(ring[0])
        assert rot[i:] + rot[:i] == ring
        if frame.m >= 2:
            vs = [p[0] for p in frame.bad]
            assert all(fv == fu + 1 for fu, fv in frame.bad)
            assert vs == sorted(vs) and vs[-1] == n - 2
            for (v, _vn), ws in zip(frame.bad, frame.witnesses):
                assert max(ws) < v  # sidedness
            for ws, ws_next in zip(frame.witnesses, frame.witnesses[1:]):
                assert min(ws) > max(ws_next)  # nestedness
            # Connector values stay in or below their left block and never
            # increase along a right block (the two-pointer's contract).
            for left, right, ws_next in zip(
                frame.blocks_left, frame.blocks_right, frame.witnesses[1:]
            ):
                lo = max(ws_next)
                prev = None
                for r in right:
                    val = frame.l_table[r]
                    assert val == lo or val in left
                    if prev is not None:
                        assert val <= prev
                    prev = val


@given(st.integers(4, 10), st.integers(0, 300))
def test_geometric_frames_have_at_most_one_bad_edge(n, seed):
    # Straight-line drawings: the hub's consecutive-pair edges can cross a
    # star edge only across one angular gap wider than a half-turn.
    d = generators.random_geometric(n, seed)
    for frame in _frames(d):
        assert frame.m <= 1


@pytest.mark.parametrize("hub", range(1, 7))
def test_twisted_frames_refuted(hub):
    with pytest.raises(NotConvexEvidence) as err:
        build_star_frame(generators.twisted(6), hub)
    assert err.value.which == "witness-two-block"
    assert err.value.vertices


def test_frame_argument_errors(conv6):
    with pytest.raises(ValueError):
        build_star_frame(conv6, 0)
    with pytest.raises(TooFewVertices):
        build_star_frame(_tiny(), 1)


def _tiny():
    # Bypass generator minimums via a direct Drawing: not possible through
    # the public constructors, so reuse n=3 and drop to the error path by
    # asking for a frame of a 2-vertex slice instead.
    class Stub:
        n = 2

    return Stub()


def test_quadratic_query_budget():
    d = generators.random_geometric(60, 5)
    view, counter = instrumented(d)
    build_star_frame(view, 60)
    assert counter.count <= 2 * 60 * 60
