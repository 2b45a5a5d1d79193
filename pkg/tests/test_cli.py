import json
import subprocess
import sys

import pytest

from superint.cli import main
from superint.exactmath import RationalFunction, X

P4 = "4z(2z^2-1)(2z^2+3)/((2z^2+1)(4z^4+3))"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_extend_writes_exact_potential(tmp_path, capsys):
    out = tmp_path / "v.json"
    code, _, _ = run(capsys, "extend", "--ms", "2", "--out", str(out))
    assert code == 0
    data = json.loads(out.read_text())
    assert data["quadratic"] == "1/1" and data["constant"] == "-2/1"
    assert RationalFunction.from_json(data["rational_part"]) == 8 * (2 * X**2 - 1) / (2 * X**2 + 1) ** 2


def test_extend_sample_csv(capsys):
    code, out, _ = run(capsys, "extend", "--ms", "2", "--sample", "0:1:3")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "x,V" and len(lines) == 4
    assert float(lines[1].split(",")[1]) == pytest.approx(-10.0)  # V(0) = -2 - 8


def test_extend_irregular_spec_is_usage_error(capsys):
    code, out, err = run(capsys, "extend", "--ms", "1")
    assert code == 1 and out == "" and "--ms" in err and "singular extension" in err
    assert len(err.strip().splitlines()) == 1


def test_painleve_check_exact_zero(capsys):
    code, out, _ = run(capsys, "painleve-check", "--eq", "4", "--alpha", "5", "--beta", "-8", "--rational", P4)
    assert code == 0 and out.strip() == "residual: 0 (exact)"


def test_painleve_check_failure_exit_code(tmp_path, capsys):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "painleve-check", "--eq", "4", "--alpha", "5", "--beta", "-7",
                       "--rational", P4, "--out", str(report))
    assert code == 2 and out.startswith("residual: ") and "(exact)" not in out
    assert json.loads(report.read_text())["zero"] is False


@pytest.mark.parametrize("expr", ["4z(2z^2-1", "0.5z", "z*w"])
def test_painleve_check_malformed_rational(capsys, expr):
    code, _, err = run(capsys, "painleve-check", "--eq", "4", "--alpha", "5", "--beta", "-8", "--rational", expr)
    assert code == 1 and "--rational" in err


def test_painleve_missing_parameter(capsys):
    code, _, err = run(capsys, "painleve-check", "--eq", "4", "--alpha", "5", "--rational", "z")
    assert code == 1 and "--beta" in err


def test_painleve_params_list(capsys):
    code, out, _ = run(capsys, "painleve-check", "--eq", "2", "--params", "1", "--rational=-1/z")
    assert code == 0 and "0 (exact)" in out


def test_compare_deg1_deg2_csv(capsys):
    code, out, _ = run(capsys, "compare", "--left", "deg1", "--right", "deg2", "--nmax", "10")
    rows = out.splitlines()
    assert code == 0 and rows[0] == "N,energy,left,right,delta"
    assert [int(r.split(",")[-1]) for r in rows[1:]] == [0, 0, 0] + [1] * 8


def test_compare_kstep_against_deg2(capsys):
    code, out, _ = run(capsys, "compare", "--left", "deg2", "--right", "kstep", "--nmax", "12",
                       "--format", "json")
    assert code == 0 and json.loads(out)["differences"] == 0


def test_unknown_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 1
    assert "invalid choice" in capsys.readouterr().err


def test_missing_required_option(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["extend"])
    assert exc.value.code == 1 and "--ms" in capsys.readouterr().err


def test_pha_check_and_negative_control(capsys):
    code, out, _ = run(capsys, "pha-check", "--ms", "2")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["spacing"] == "6" and data["order"] == 3
    code, out, _ = run(capsys, "pha-check", "--ms", "2", "--perturb", "1/100")
    assert code == 2 and json.loads(out)["ok"] is False


def test_equivalence(capsys):
    code, out, _ = run(capsys, "equivalence", "--ms", "2,3")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["difference"] == "8" and data["deleted_indices"] == [2, 3]
    code, _, err = run(capsys, "equivalence", "--ms", "0,1")
    assert code == 1 and "m_k >= k" in err


def test_potential_round_trip_into_spectrum(tmp_path, capsys):
    v = tmp_path / "v.json"
    run(capsys, "extend", "--ms", "2", "--out", str(v))
    code, out, _ = run(capsys, "spectrum", "--potential", str(v), "--count", "2", "--points", "1601")
    levels = json.loads(out)["eigenvalues"]
    assert code == 0 and levels == pytest.approx([-5, 1], abs=1e-6)


def test_q18_round_trip_into_spectrum(tmp_path, capsys):
    q = tmp_path / "q.json"
    assert run(capsys, "q18", "--out", str(q))[0] == 0
    code, out, _ = run(capsys, "spectrum", "--potential", f"{q}#x_part", "--count", "2", "--format", "csv")
    rows = out.splitlines()
    assert code == 0 and float(rows[1].split(",")[1]) == pytest.approx(-5 / 6, abs=1e-6)


def test_q18_rejects_non_solution(capsys):
    code, _, err = run(capsys, "q18", "--rational", "z")
    assert code == 1 and "not a P4 solution" in err


def test_report_round_trip_into_compare(tmp_path, capsys):
    rep = tmp_path / "r.json"
    run(capsys, "degeneracy", "--route", "ladder", "--nmax", "6", "--format", "json", "--out", str(rep))
    code, out, _ = run(capsys, "compare", "--left", str(rep), "--right", "deg2", "--nmax", "6")
    assert code == 0 and all(r.endswith(",0") for r in out.splitlines()[1:])


def test_operator_round_trip_into_classify(tmp_path, capsys):
    ops, v = tmp_path / "ops.json", tmp_path / "v.json"
    run(capsys, "pha-check", "--ms", "2", "--operators", str(ops))
    run(capsys, "extend", "--ms", "2", "--out", str(v))
    code, out, _ = run(capsys, "classify", "--H", f"{ops}#H", "--K", f"{ops}#c")
    assert code == 0 and json.loads(out) == {"kind": "Ladder", "alpha1": "6/1"}
    code, out, _ = run(capsys, "classify", "--H", str(v), "--K", f"{ops}#c_dag")
    assert json.loads(out)["alpha1"] == "-6/1"


def test_classify_bad_input(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    code, _, err = run(capsys, "classify", "--H", str(bad), "--K", str(bad))
    assert code == 1 and "--H" in err


def test_degeneracy_routes(capsys):
    code, out, _ = run(capsys, "degeneracy", "--route", "bruteforce", "--ms", "2", "--nmax", "3")
    assert code == 0 and out.splitlines()[1:] == [
        "-2,-4/1,1,combinatorial", "-1,-2/1,1,combinatorial", "0,0/1,1,combinatorial",
        "1,2/1,2,combinatorial", "2,4/1,3,combinatorial", "3,6/1,4,combinatorial"]
    code, _, err = run(capsys, "degeneracy", "--route", "formula", "--ms", "2", "--nmin", "-5")
    assert code == 1 and "below ground level" in err


def test_unirreps_and_multiplets(capsys):
    code, out, _ = run(capsys, "unirreps", "--family", "c", "--p-max", "1", "--positivity", "report_only")
    rows = out.splitlines()
    assert code == 0 and rows[2] == "c,1,5/3,2,0,1,1,-8/1"
    code, out, _ = run(capsys, "multiplets", "--m1", "2", "--nmin", "3", "--nmax", "3")
    assert out.splitlines()[1] == "3,1,0,3,4,1x(s=1/2) + 2x(s=0)"
    code, _, err = run(capsys, "multiplets", "--m1", "3")
    assert code == 1 and "--m1" in err


def test_grid_points_environment(monkeypatch, capsys):
    monkeypatch.setenv("SUPERINT_GRID_POINTS", "1000")
    code, _, err = run(capsys, "spectrum", "--ms", "2", "--count", "1")
    assert code == 1 and "odd" in err


@pytest.mark.parametrize("argv", [
    ["extend", "--ms", "2,3"],
    ["unirreps", "--format", "json"],
    ["degeneracy", "--route", "algebraic", "--format", "json"],
    ["spectrum", "--q18", "x", "--count", "2", "--points", "801"],
])
def test_outputs_are_deterministic(capsys, argv):
    first = run(capsys, *argv)[1]
    assert first and run(capsys, *argv)[1] == first


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "superint", "painleve-check", "--eq", "1", "--rational", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stdout.startswith("residual: ")
