import json

import pytest

from ratblow.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


CANONICAL = "src/ratblow/data/canonical_assignment.json"


def test_hj_expand(capsys):
    code, out, _ = run_cli(capsys, "hj", "expand", "36", "5")
    assert code == 0 and out.strip() == "8 2 2 2 2"
    code, out, _ = run_cli(capsys, "hj", "expand", "12100", "7369")
    assert code == 0 and out.strip() == "2 3 5 7 2 2 3 2 2 3 3"


def test_hj_expand_bad_fraction(capsys):
    code, _, err = run_cli(capsys, "hj", "expand", "5", "36")
    assert code == 2 and "error" in err


def test_hj_wahl(capsys):
    code, out, _ = run_cli(capsys, "hj", "wahl", "110", "67")
    assert code == 0 and out.strip() == "2 3 5 7 2 2 3 2 2 3 3"


def test_hj_recognize(capsys):
    code, out, _ = run_cli(capsys, "hj", "recognize", "2,3,5,7,2,2,3,2,2,3,3")
    assert code == 0 and out.strip() == "110 67"
    code, out, _ = run_cli(capsys, "hj", "recognize", "2,2")
    assert code == 0 and out.strip() == "none"


def test_hj_meridians(capsys):
    code, out, _ = run_cli(capsys, "hj", "meridians", "8,2,2,2,2")
    assert code == 0
    assert out.splitlines() == ["1 8 15 22 29", "order 36"]


def test_hj_json_mode(capsys):
    code, out, _ = run_cli(capsys, "hj", "recognize", "8,2,2,2,2", "--emit", "json")
    data = json.loads(out)
    assert code == 0 and data["wahl"] == {"n": 6, "a": 1}
    assert data["p"] == 36 and data["q"] == 5


def test_snf(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("2 2\n2 0\n0 3\n")
    code, out, _ = run_cli(capsys, "snf", str(path))
    assert code == 0 and out.strip() == "1 6"


def test_snf_json(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("2 2\n2 0\n0 3\n")
    code, out, _ = run_cli(capsys, "snf", str(path), "--emit", "json")
    data = json.loads(out)
    assert data["diagonal"] == [1, 6]
    U, V, D = data["U"], data["V"], data["D"]
    m = [[2, 0], [0, 3]]
    um = [[sum(U[i][k] * m[k][j] for k in range(2)) for j in range(2)]
          for i in range(2)]
    umv = [[sum(um[i][k] * V[k][j] for k in range(2)) for j in range(2)]
           for i in range(2)]
    assert umv == D


def test_snf_bad_file(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("2 2\n1 2 3\n")
    code, _, err = run_cli(capsys, "snf", str(path))
    assert code == 2 and "error" in err


def test_run_canonical(capsys):
    code, out, _ = run_cli(capsys, "run", CANONICAL, "--quiet")
    assert code == 0 and "verdict: ok" in out


def test_run_expect_failure(tmp_path, capsys, canonical_recipe):
    import copy
    bad = copy.deepcopy(canonical_recipe)
    bad["expect"]["k2"] = 4
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, out, _ = run_cli(capsys, "run", str(path))
    assert code == 1 and "expect k2" in out


def test_run_malformed_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"base": "P3"}')
    code, _, err = run_cli(capsys, "run", str(path))
    assert code == 2

    code, _, err = run_cli(capsys, "run", str(tmp_path / "missing.json"))
    assert code == 2


def test_verify_paper_with_assignment(capsys):
    code, out, _ = run_cli(capsys, "verify-paper", "--assignment", CANONICAL)
    assert code == 0
    assert "verdict: all checks passed" in out
    assert "K2=3" in out
    assert "Z/2" in out


def test_verify_paper_json_roundtrip(tmp_path, capsys):
    code, out1, _ = run_cli(capsys, "verify-paper", "--assignment", CANONICAL,
                            "--emit", "json")
    assert code == 0
    data = json.loads(out1)
    assert data["passed"] is True
    path = tmp_path / "assignment.json"
    path.write_text(json.dumps(data["assignment"]))
    code, out2, _ = run_cli(capsys, "verify-paper", "--assignment", str(path),
                            "--emit", "json")
    assert code == 0
    assert out1 == out2  # byte-for-byte


def test_verify_paper_broken_assignment(tmp_path, capsys, canonical_recipe):
    import copy
    broken = copy.deepcopy(canonical_recipe)
    broken["chains"][1]["curves"] = broken["chains"][1]["curves"][:4]
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(broken))
    code, out, _ = run_cli(capsys, "verify-paper", "--assignment", str(path))
    assert code == 1 and "FAIL" in out


def test_bigint_json_serialization(capsys):
    code, out, _ = run_cli(capsys, "hj", "meridians",
                           ",".join(["2"] * 80), "--emit", "json")
    assert code == 0
    data = json.loads(out)
    # order of an all-2 chain of length k is k+1, small; force big numbers
    # through the generic converter instead
    from ratblow.cli import _jsonable
    big = 2 ** 80
    assert _jsonable({"x": big}) == {"x": str(big)}
    assert _jsonable({"x": -big}) == {"x": str(-big)}
    assert _jsonable({"x": 7}) == {"x": 7}
    assert _jsonable([True, None]) == [True, None]
