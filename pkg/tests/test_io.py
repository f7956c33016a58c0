import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from convexham import generators, io
from convexham.certificates import (
    cycle_certificate,
    mark_verified,
    path_certificate,
    subdrawing_certificate,
)
from convexham.drawing import same_drawing
from convexham.errors import FormatError
from convexham.hamiltonian import hamiltonian_cycle, st_hamiltonian_path
from convexham.oracle import verify_certificate
from convexham.subdrawings import greedy_maximal_plane


def test_cycle_certificate_edges():
    c = cycle_certificate((2, 4, 1, 3), {"plane": True})
    assert c.edges == ((2, 4), (1, 4), (1, 3), (2, 3))
    assert c.kind == "cycle" and not c.oracle_verified
    assert mark_verified(c).oracle_verified


def test_certificate_validation():
    with pytest.raises(ValueError):
        cycle_certificate((1, 2), {})
    with pytest.raises(ValueError):
        cycle_certificate((1, 2, 2), {})
    with pytest.raises(ValueError):
        path_certificate((3,), {})
    with pytest.raises(ValueError):
        subdrawing_certificate([(1, 2), (2, 1)], {})


def test_subdrawing_certificate_canonical():
    c = subdrawing_certificate([(3, 1), (2, 4)], {"plane": True})
    assert c.edges == ((1, 3), (2, 4))
    assert c.vertices == (1, 2, 3, 4)


@given(st.integers(4, 12), st.integers(0, 300))
def test_drawing_roundtrip_geometric(n, seed):
    d = generators.random_geometric(n, seed)
    text = io.dumps_drawing(d)
    d2 = io.loads_drawing(text)
    assert same_drawing(d, d2)
    assert io.dumps_drawing(d2) == text


@pytest.mark.parametrize("n", [5, 6, 7])
def test_drawing_roundtrip_abstract(n):
    d = generators.twisted(n)
    text = io.dumps_drawing(d)
    d2 = io.loads_drawing(text)
    assert same_drawing(d, d2)
    assert io.dumps_drawing(d2) == text


def test_writer_redundant_crossings_small_only():
    small = io.drawing_to_json(generators.random_geometric(8, 0))
    assert "crossings" in small and "points" in small
    big = io.drawing_to_json(generators.random_geometric(13, 0))
    assert "crossings" not in big


def test_reader_rejects_rotation_tamper(rand8):
    obj = io.drawing_to_json(rand8)
    obj["rotations"][2] = obj["rotations"][2][::-1]
    with pytest.raises(FormatError):
        io.drawing_from_json(obj)


def test_reader_rejects_crossing_tamper(rand8):
    obj = io.drawing_to_json(rand8)
    obj["crossings"] = obj["crossings"][:-1]
    with pytest.raises(FormatError):
        io.drawing_from_json(obj)


def test_reader_rejects_malformed():
    with pytest.raises(FormatError):
        io.loads_drawing("{not json")
    with pytest.raises(FormatError):
        io.loads_drawing(json.dumps({"n": 4, "rotations": []}))
    with pytest.raises(FormatError):
        io.loads_drawing(json.dumps({"n": 4, "rotations": [], "bogus": 1}))
    with pytest.raises(FormatError):
        io.loads_drawing(
            json.dumps({"n": 3, "rotations": [[2, 3], [1, 3], [1, 2]],
                        "points": [[0, 0], [1, 0]]})
        )


def test_certificate_roundtrip_preserves_claim_shapes(rand8):
    p = st_hamiltonian_path(rand8, 2, 7)
    p2 = io.loads_certificate(io.dumps_certificate(p))
    assert p2 == p
    assert p2.claims["endpoints"] == (2, 7)
    # The restored certificate still verifies.
    assert verify_certificate(rand8, p2).oracle_verified


def test_certificate_roundtrip_all_kinds(rand8):
    for cert in (
        hamiltonian_cycle(rand8),
        greedy_maximal_plane(rand8).certificate(),
    ):
        text = io.dumps_certificate(cert)
        assert io.loads_certificate(text) == cert


def test_certificate_reader_rejects_inconsistency():
    c = hamiltonian_cycle(generators.convex_position(6))
    obj = io.certificate_to_json(c)
    obj["edges"] = obj["edges"][:-1]
    with pytest.raises(FormatError):
        io.certificate_from_json(obj)
    obj = io.certificate_to_json(c)
    obj["kind"] = "mystery"
    with pytest.raises(FormatError):
        io.certificate_from_json(obj)
    obj = io.certificate_to_json(greedy_maximal_plane(generators.convex_position(6)).certificate())
    obj["vertices"] = obj["vertices"][:-1]
    with pytest.raises(FormatError):
        io.certificate_from_json(obj)


def test_dumps_deterministic(rand9):
    assert io.dumps_drawing(rand9) == io.dumps_drawing(
        generators.random_geometric(9, 7)
    )
