import json

import pytest

from convexham.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def manifest_of(err):
    return json.loads(err.strip().splitlines()[-1])


def test_gen_is_byte_deterministic(capsys):
    code, out1, _ = run(capsys, "gen", "random", "--n", "9", "--seed", "3")
    _, out2, _ = run(capsys, "gen", "random", "--n", "9", "--seed", "3")
    assert code == 0
    assert out1 == out2


def test_gen_convex_position_pentagon(capsys):
    code, out, _ = run(capsys, "gen", "convex-position", "--n", "5")
    assert code == 0
    obj = json.loads(out)
    assert obj["n"] == 5
    assert len(obj["crossings"]) == 5
    assert "points" in obj


def test_gen_random_requires_seed(capsys):
    code, _, err = run(capsys, "gen", "random", "--n", "6")
    assert code == 2
    assert "seed" in err


def test_pipeline_gen_find_verify(capsys, tmp_path):
    _, drawing, _ = run(capsys, "gen", "random", "--n", "8", "--seed", "11")
    dfile = tmp_path / "d.json"
    dfile.write_text(drawing)
    code, cert, _ = run(capsys, "find", "hc", "--in", str(dfile))
    assert code == 0
    cfile = tmp_path / "c.json"
    cfile.write_text(cert)
    code, out, _ = run(capsys, "verify", "--in", str(dfile), "--cert", str(cfile))
    assert code == 0
    assert json.loads(out)["verified"] is True


def test_find_on_twisted_reports_evidence(capsys, tmp_path):
    _, drawing, _ = run(capsys, "gen", "twisted", "--n", "6")
    dfile = tmp_path / "d.json"
    dfile.write_text(drawing)
    code, out, _ = run(capsys, "find", "hc", "--in", str(dfile))
    assert code == 1
    obj = json.loads(out)
    assert obj["error"] == "NotConvexEvidence"
    assert obj["which"]
    assert isinstance(obj["vertices"], list)


def test_check_convex_both_methods(capsys, tmp_path):
    _, drawing, _ = run(capsys, "gen", "convex-position", "--n", "7")
    dfile = tmp_path / "d.json"
    dfile.write_text(drawing)
    for method in ("triangles", "k5"):
        code, out, _ = run(capsys, "check-convex", "--in", str(dfile), "--method", method)
        assert code == 0
        obj = json.loads(out)
        assert obj["convex"] is True and obj["witness"] is None


def test_check_convex_twisted_witness(capsys, tmp_path):
    _, drawing, _ = run(capsys, "gen", "twisted", "--n", "5")
    dfile = tmp_path / "d.json"
    dfile.write_text(drawing)
    code, out, _ = run(capsys, "check-convex", "--in", str(dfile), "--method", "k5")
    assert code == 0
    obj = json.loads(out)
    assert obj["convex"] is False
    assert obj["witness"]["class"] == "V"


def test_manifest_shape(capsys, tmp_path):
    _, drawing, _ = run(capsys, "gen", "random", "--n", "7", "--seed", "2")
    dfile = tmp_path / "d.json"
    dfile.write_text(drawing)
    _, _, err = run(capsys, "find", "star-hc", "--in", str(dfile), "--star", "3")
    m = manifest_of(err)
    assert set(m) == {
        "command",
        "input_hash",
        "seeds",
        "versions",
        "timing_ms",
        "oracle_queries",
    }
    assert m["command"][0] == "find"
    assert len(m["input_hash"]) == 64
    assert m["oracle_queries"] > 0
    assert "convexham" in m["versions"]


def test_usage_error_missing_endpoint(capsys, tmp_path):
    _, drawing, _ = run(capsys, "gen", "convex-position", "--n", "6")
    dfile = tmp_path / "d.json"
    dfile.write_text(drawing)
    code, _, err = run(capsys, "find", "st-path", "--in", str(dfile), "--s", "1")
    assert code == 2
    assert "usage error" in err


def test_unknown_command_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_max_plane_trials(capsys, tmp_path):
    _, drawing, _ = run(capsys, "gen", "convex-position", "--n", "8")
    dfile = tmp_path / "d.json"
    dfile.write_text(drawing)
    code, out, _ = run(capsys, "max-plane", "--in", str(dfile), "--trials", "5")
    assert code == 0
    obj = json.loads(out)
    assert obj["size"] == 13
    assert obj["trial_sizes"] == [13] * 5
    assert len(obj["edges"]) == 13


def test_max_plane_refuses_twisted(capsys, tmp_path):
    _, drawing, _ = run(capsys, "gen", "twisted", "--n", "6")
    dfile = tmp_path / "d.json"
    dfile.write_text(drawing)
    code, out, _ = run(capsys, "max-plane", "--in", str(dfile))
    assert code == 1
    assert json.loads(out)["error"] == "NotConvex"


def test_render_outputs_svg(capsys, tmp_path):
    _, drawing, _ = run(capsys, "gen", "random", "--n", "6", "--seed", "5")
    dfile = tmp_path / "d.json"
    dfile.write_text(drawing)
    code, out, _ = run(capsys, "render", "--in", str(dfile))
    assert code == 0
    assert out.startswith("<svg")
    assert out.count("<circle") == 6


def test_render_abstract_drawing_fails(capsys, tmp_path):
    _, drawing, _ = run(capsys, "gen", "twisted", "--n", "5")
    dfile = tmp_path / "d.json"
    dfile.write_text(drawing)
    code, out, _ = run(capsys, "render", "--in", str(dfile))
    assert code == 1
    assert json.loads(out)["error"] == "NoCoordinates"


def test_verify_rejects_lying_certificate(capsys, tmp_path):
    _, drawing, _ = run(capsys, "gen", "convex-position", "--n", "6")
    dfile = tmp_path / "d.json"
    dfile.write_text(drawing)
    _, cert, _ = run(capsys, "find", "st-path", "--in", str(dfile), "--s", "1", "--t", "4")
    obj = json.loads(cert)
    obj["claims"]["endpoints"] = [2, 5]
    cfile = tmp_path / "c.json"
    cfile.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "verify", "--in", str(dfile), "--cert", str(cfile))
    assert code == 1
    res = json.loads(out)
    assert res["error"] == "CertificateError"
    assert res["failed"] == ["endpoints"]


def test_find_reads_stdin(capsys, monkeypatch):
    _, drawing, _ = run(capsys, "gen", "convex-position", "--n", "6")
    import io as _io

    monkeypatch.setattr("sys.stdin", _io.StringIO(drawing))
    code, out, _ = run(capsys, "find", "empty-cycle", "--k", "3", "--star", "2")
    assert code == 0
    obj = json.loads(out)
    assert obj["kind"] == "cycle"
    assert len(obj["vertices"]) == 3


def test_bench_slopes(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "30,60", "--reps", "2", "--seed", "0")
    assert code == 0
    obj = json.loads(out)
    assert [r["n"] for r in obj["results"]] == [30, 30, 60, 60]
    for r in obj["results"]:
        n = r["n"]
        assert r["queries"] == (n - 1) * (n - 3)
    assert len(obj["slopes"]) == 1
    assert obj["slopes"][0] < 2.15


def test_highlight_certificate_from_stdin(capsys, monkeypatch, tmp_path):
    _, drawing, _ = run(capsys, "gen", "random", "--n", "7", "--seed", "0")
    dfile = tmp_path / "d.json"
    dfile.write_text(drawing)
    _, cert, _ = run(capsys, "find", "hc", "--in", str(dfile))
    import io as _io

    monkeypatch.setattr("sys.stdin", _io.StringIO(cert))
    code, out, _ = run(capsys, "render", "--in", str(dfile), "--highlight", "-")
    assert code == 0
    assert out.count('class="edge hl"') == 7
