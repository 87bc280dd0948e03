import csv
import io
import json

import pytest

from sklyanin.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_hilbert_builtin(capsys):
    code, out, _ = run(capsys, "hilbert", "builtin:s111", "--max-degree", "5")
    assert code == 0
    assert json.loads(out)["dims"] == [1, 3, 6, 12, 24, 48]


def test_hilbert_zeta_builtin_over_f7(capsys):
    code, out, _ = run(capsys, "hilbert", "builtin:s1bc:w,w", "--field", "fp:7", "--max-degree", "6")
    assert code == 0 and json.loads(out)["dims"][-1] == 96


def test_presentation_file(tmp_path, capsys):
    f = tmp_path / "s111.txt"
    f.write_text("generators: x y z\n1*y.z + 1*z.y + 1*x.x\n1*z.x + 1*x.z + 1*y.y\n1*x.y + 1*y.x + 1*z.z\n")
    code, out, _ = run(capsys, "hilbert", str(f), "--max-degree", "4")
    assert code == 0 and json.loads(out)["dims"] == [1, 3, 6, 12, 24]


@pytest.mark.parametrize("body,needle", [
    ("1*x\n", "quadratic"),
    ("x.y + y.x\nx.y + y.x\n", "dependent"),
    ("x.y + + q\n", "line 2"),
])
def test_bad_presentation_files(tmp_path, capsys, body, needle):
    f = tmp_path / "bad.txt"
    f.write_text("generators: x y z\n" + body)
    code, _, err = run(capsys, "hilbert", str(f))
    assert code == 3 and needle in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "hilbert", "/nonexistent/file")
    assert code == 3 and "cannot read" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["hilbert", "builtin:s111", "--bogus"])
    assert exc.value.code == 2
    code, _, _ = run(capsys, "hilbert", "builtin:s111", "--field", "fp:5")
    assert code == 3


def test_oracle_bounds(capsys):
    assert run(capsys, "ppring", "--max-degree", "3", "--oracle-max", "0")[0] == 4
    code, out, _ = run(capsys, "ppring", "--max-degree", "3", "--oracle-max", "1")
    assert code == 0 and json.loads(out)["dims"] == [1, 3, 6, 12]
    assert run(capsys, "ppring", "--max-degree", "4", "--oracle-max", "6")[0] == 4


def test_ppring_schema(capsys):
    code, out, _ = run(capsys, "ppring", "--max-degree", "6", "--oracle-max", "5")
    rep = json.loads(out)
    assert code == 0
    for key in ("dims", "oracle_dims", "glued_dims", "generation", "kernel_dims", "series_match"):
        assert key in rep
    assert rep["kernel_dims"] == [0, 0, 0, 6, 18]
    for chk in rep["checks"]:
        assert chk["expected"]["provenance"] in ("PAPER", "DERIVED", "TRIVIAL")


def test_koszul_and_twist(capsys):
    code, out, _ = run(capsys, "koszul-dual", "builtin:s111", "--max-degree", "5")
    assert code == 0 and json.loads(out)["dual_dims"] == [1, 3, 3, 3, 3, 3]
    code, out, _ = run(capsys, "koszul-dual", "builtin:s1bc:w,w")
    rep = json.loads(out)
    assert code == 0 and [d["name"] for d in rep["discrepancies"]] == ["printed dual span"]
    code, out, _ = run(capsys, "twist", "builtin:s111", "--auto", "sigma", "--expect", "builtin:s1bc:w,-1-w")
    assert code == 0
    code, _, _ = run(capsys, "twist", "builtin:s100", "--auto", "tau", "--expect", "builtin:sabc:0,1,0")
    assert code == 1
    code, _, _ = run(capsys, "twist", "builtin:s100", "--auto", "matrix:0,1,0,0,0,1,0,0,1")
    assert code == 3


def test_certify_normal(capsys):
    code, out, _ = run(capsys, "certify-normal", "builtin:ore-ext:w,w")
    rep = json.loads(out)
    assert code == 0 and rep["certificate"] == {"x": "w*x", "y": "(-1-w)*y", "z": "1*z"}
    code, out, _ = run(capsys, "certify-normal", "builtin:s111", "--element", "x")
    assert code == 1 and json.loads(out)["normal"] is False


def test_ptscheme(capsys):
    code, out, _ = run(capsys, "ptscheme", "--d", "2", "--field", "fp:7")
    rep = json.loads(out)
    assert code == 0 and rep["points"] == 42 and len(rep["singular_points"]) == 6
    assert run(capsys, "ptscheme", "--d", "2")[0] == 3


def test_ptscheme_s100_profile(capsys):
    code, out, _ = run(capsys, "ptscheme", "--presentation", "builtin:s100", "--d", "2",
                       "--field", "fp:7", "--mode", "enumerate")
    rep = json.loads(out)
    assert code == 0 and rep["points"] == 42
    assert sum(rep["support_profile"].values()) == 42
    assert rep["support_profile"]["xy|y"] == 6


def test_kernel(capsys):
    code, out, _ = run(capsys, "kernel", "--d", "4")
    rep = json.loads(out)
    assert code == 0 and rep["kernel_dim"] == 6 and rep["dim_S"] == 24


def test_csv_and_out(tmp_path, capsys):
    path = tmp_path / "r.csv"
    code, out, _ = run(capsys, "hilbert", "builtin:s100", "--format", "csv", "--out", str(path))
    assert code == 0 and out == ""
    rows = list(csv.reader(io.StringIO(path.read_text())))
    assert rows[0][:2] == ["name", "provenance"] and rows[1][-2] == "True"


def test_verify_all_fast_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify-all", "--fast")
    code2, out2, _ = run(capsys, "verify-all", "--fast")
    assert code1 == code2 == 0 and out1 == out2
    assert json.loads(out1)["discrepancies"]
    assert run(capsys, "verify-all", "--fast", "--strict")[0] == 1
