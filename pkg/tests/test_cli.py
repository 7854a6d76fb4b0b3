"""CLI: JSON in, JSON out, deterministic bytes, exit-code contract."""

import json

import chevloops.cli as cli
from chevloops import serialize
from chevloops.cli import main


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_symbol_loop_emits_a_loop(capsys):
    code, doc = _run(capsys, ["symbol-loop", "--group", "sl2", "--root",
                              "1,2", "--u", "2", "--v", "3", "--ring", "Q"])
    assert code == 0
    assert doc["schema"] == serialize.SCHEMA_PATH
    path = serialize.path_from_json(doc)
    assert path.is_loop()


def test_symbol_loop_over_finite_field(capsys):
    code, doc = _run(capsys, ["symbol-loop", "--group", "sl3", "--root",
                              "2,3", "--u", "3", "--v", "5", "--ring",
                              "Fq:7^1"])
    assert code == 0
    assert serialize.path_from_json(doc).is_loop()


def test_symbol_loop_with_coefficient_vector_scalars(capsys):
    # u = 1 + x and v = x in F_4, written as little-endian coefficients
    code, doc = _run(capsys, ["symbol-loop", "--group", "sl2", "--root",
                              "1,2", "--u", "1,1", "--v", "0,1", "--ring",
                              "Fq:2^2"])
    assert code == 0
    assert serialize.path_from_json(doc).is_loop()


def test_verify_loop_roundtrip(tmp_path, capsys):
    code, doc = _run(capsys, ["symbol-loop", "--group", "sl2", "--root",
                              "1,2", "--u", "2", "--v", "3", "--ring", "Q"])
    f = tmp_path / "loop.json"
    f.write_text(json.dumps(doc))
    code, report = _run(capsys, ["verify-loop", "--in", str(f)])
    assert code == 0
    assert report["is_path"] is True
    assert report["is_loop"] is True
    at1 = serialize.matrix_from_json(report["endpoints"]["at1"])
    assert at1.is_identity()


def test_factor_and_lift(tmp_path, capsys):
    code, doc = _run(capsys, ["symbol-loop", "--group", "sl2", "--root",
                              "1,2", "--u", "2", "--v", "3", "--ring", "Q"])
    f = tmp_path / "loop.json"
    f.write_text(json.dumps(doc))

    code, factored = _run(capsys, ["factor", "--in", str(f)])
    assert code == 0
    assert factored["count"] == len(factored["factors"]) > 0

    code, lifted = _run(capsys, ["lift", "--in", str(f)])
    assert code == 0
    assert lifted["is_k2"] is True
    assert lifted["schema"] == serialize.SCHEMA_WORD
    assert lifted["note"].startswith("rank-1")

    g = tmp_path / "word.json"
    g.write_text(json.dumps(lifted))
    code, checked = _run(capsys, ["k2-check", "--in", str(g)])
    assert code == 0
    assert checked["projection_is_identity"] is True


def test_verify_identity(tmp_path, capsys):
    _, loop = _run(capsys, ["symbol-loop", "--group", "sl2", "--root",
                            "1,2", "--u", "2", "--v", "3", "--ring", "Q"])
    ident = dict(loop)
    ident["entries"] = [[[[[0], "1"]], []], [[], [[[0], "1"]]]]
    f = tmp_path / "cmp.json"
    f.write_text(json.dumps({"lhs": [loop], "rhs": [ident]}))
    code, doc = _run(capsys, ["verify-identity", "--in", str(f)])
    assert code == 0
    assert doc["equal"] is False
    assert doc["first_difference"] is not None


def test_tame_value(capsys):
    code, doc = _run(capsys, ["tame", "--a", "2", "--b", "3", "--p", "3"])
    assert code == 0
    assert doc == {"value": "2"}


def test_k2m_field_q2(capsys):
    code, doc = _run(capsys, ["k2m-field", "--q", "2"])
    assert code == 0
    assert doc["invariant_factors"] == []
    assert doc["free_rank"] == 0


def test_schur_subcommand(tmp_path, capsys):
    f3 = "Fq:3^1"
    a = {"schema": serialize.SCHEMA_MATRIX, "n": 3, "ring": f3,
         "entries": [[[2], [0], [0]], [[0], [2], [0]], [[0], [0], [1]]]}
    b = {"schema": serialize.SCHEMA_MATRIX, "n": 3, "ring": f3,
         "entries": [[[1], [0], [0]], [[0], [2], [0]], [[0], [0], [2]]]}
    f = tmp_path / "gens.json"
    f.write_text(json.dumps({"gens": [a, b]}))
    code, doc = _run(capsys, ["schur", "--gens", str(f)])
    assert code == 0
    assert doc["order"] == 4
    assert doc["invariant_factors"] == [2]
    assert "timing" in doc


def test_schur_output_deterministic_apart_from_timing(tmp_path, capsys):
    f7 = "Fq:7^1"
    g = {"schema": serialize.SCHEMA_MATRIX, "n": 2, "ring": f7,
         "entries": [[[3], [0]], [[0], [5]]]}   # diag(3, 1/3), order 6
    f = tmp_path / "gens.json"
    f.write_text(json.dumps({"gens": [g]}))
    _, first = _run(capsys, ["schur", "--gens", str(f)])
    _, second = _run(capsys, ["schur", "--gens", str(f)])
    first.pop("timing")
    second.pop("timing")
    assert first == second == {"order": 6, "invariant_factors": [],
                               "free_rank": 0}


def test_simplicial_face_poly(tmp_path, capsys):
    doc = {"schema": serialize.SCHEMA_SIMPLEX_POLY, "level": 1,
           "field": "Q", "poly": [[[1], "1"]]}
    f = tmp_path / "sp.json"
    f.write_text(json.dumps(doc))
    code, faced = _run(capsys, ["simplicial-face", "--i", "0", "--in", str(f)])
    assert code == 0
    assert faced["level"] == 0
    assert faced["poly"] == [[[], "1"]]


def test_verify_homotopy(tmp_path, capsys):
    sigma = {"schema": serialize.SCHEMA_SIMPLEX_MATRIX, "level": 2, "n": 2,
             "field": "Q",
             "entries": [[[[[0, 0], "1"]], [[[1, 1], "1"]]],
                         [[], [[[0, 0], "1"]]]]}
    ring = "poly:Q:T"
    ident = {"schema": serialize.SCHEMA_PATH, "n": 2, "ring": ring,
             "entries": [[[[[0], "1"]], []], [[], [[[0], "1"]]]]}
    loop = {"schema": serialize.SCHEMA_PATH, "n": 2, "ring": ring,
            "entries": [[[[[0], "1"]], [[[1], "1"], [[2], "-1"]]],
                        [[], [[[0], "1"]]]]}
    fs = tmp_path / "sigma.json"
    fl = tmp_path / "from.json"
    ft = tmp_path / "to.json"
    fs.write_text(json.dumps(sigma))
    fl.write_text(json.dumps(ident))
    ft.write_text(json.dumps(loop))
    code, doc = _run(capsys, ["verify-homotopy", "--sigma", str(fs),
                              "--from", str(fl), "--to", str(ft)])
    assert code == 0
    assert doc["certified"] is True
    assert doc["faces"]["d1"]["entries"][0][1] == []


def test_malformed_json_is_exit_1(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text("{not json")
    code, doc = _run(capsys, ["verify-loop", "--in", str(f)])
    assert code == 1
    assert "error" in doc


def test_bad_flags_are_exit_1(capsys):
    code, doc = _run(capsys, ["symbol-loop", "--group", "gl2", "--root",
                              "1,2", "--u", "2", "--v", "3", "--ring", "Q"])
    assert code == 1
    assert "error" in doc
    code, doc = _run(capsys, ["tame", "--a", "2", "--b", "3"])
    assert code == 1


def test_domain_errors_are_exit_2(tmp_path, capsys):
    bad = {"schema": serialize.SCHEMA_MATRIX, "n": 2, "ring": "Q",
           "entries": [["2", "0"], ["0", "2"]]}   # det 4
    f = tmp_path / "m.json"
    f.write_text(json.dumps(bad))
    code, doc = _run(capsys, ["factor", "--in", str(f)])
    assert code == 2
    assert "determinant" in doc["error"]

    code, doc = _run(capsys, ["tame", "--a", "0", "--b", "3", "--p", "5"])
    assert code == 2
    code, doc = _run(capsys, ["k2m-field", "--q", "32"])
    assert code == 2


def test_output_bytes_are_deterministic(capsys):
    argv = ["symbol-loop", "--group", "sl3", "--root", "1,3", "--u", "2/7",
            "--v=-3/5", "--ring", "Q"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second


def test_reproduce_wiring(monkeypatch, capsys):
    # the full suite runs in test_acceptance; here only the CLI contract
    def fake_run_all(seed):
        return {"seed": seed, "criteria": [{"criterion": 1, "passed": True,
                                            "name": "stub", "seconds": 0.0}],
                "all_passed": True}
    monkeypatch.setattr(cli, "run_all", fake_run_all)
    code, doc = _run(capsys, ["reproduce", "--seed", "7"])
    assert code == 0
    assert doc["seed"] == 7 and doc["all_passed"] is True
