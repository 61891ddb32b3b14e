import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from fareyapprox.cli import run


def invoke(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_farey_lines(capsys):
    code, out, err = invoke(capsys, ["farey", "--order", "5"])
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert len(lines) == 11
    assert lines[0] == "0/1" and lines[-1] == "1/1"
    assert lines[5] == "1/2"


def test_farey_range_filter(capsys):
    code, out, _ = invoke(capsys, ["farey", "--order", "5", "--from", "1/3", "--to", "2/3"])
    assert code == 0
    assert out.splitlines() == ["1/3", "2/5", "1/2", "3/5", "2/3"]


def test_neighbors_pair_json(capsys):
    code, out, _ = invoke(capsys, ["neighbors", "--x", "5/16", "--order", "7"])
    assert code == 0
    obj = json.loads(out)
    assert obj == {
        "kind": "pair",
        "left": "2/7",
        "right": "1/3",
        "order": 7,
        "precision": 64,
    }


def test_neighbors_exact_json(capsys):
    code, out, _ = invoke(capsys, ["neighbors", "--x", "0.5", "--order", "7"])
    assert code == 0
    obj = json.loads(out)
    assert obj["kind"] == "exact"
    assert obj["value"] == obj["left"] == obj["right"] == "1/2"


def test_neighbors_out_of_range(capsys):
    code, out, err = invoke(capsys, ["neighbors", "--x", "3/2", "--order", "7"])
    assert code == 1 and out == "" and "error" in err


def test_subdivide_output(capsys):
    code, out, _ = invoke(
        capsys, ["subdivide", "--lo", "1/3", "--hi", "1/2", "--order", "3", "--gap", "1/7"]
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[:3] == ["1/3", "2/5", "1/2"]
    trailer = json.loads("\n".join(lines[3:]))
    assert trailer["points"] == 3
    assert trailer["max_gap"] == "1/10"
    assert trailer["min_gap"] == "1/15"
    assert trailer["max_denominator"] == 5


def test_subdivide_infeasible_exit_code(capsys):
    code, out, err = invoke(
        capsys,
        ["subdivide", "--lo", "0/1", "--hi", "1/7", "--order", "7",
         "--gap", "1/100", "--max-denom", "10"],
    )
    assert code == 2 and out == ""
    assert "infeasible" in err


def test_subdivide_rejects_non_consecutive_pair(capsys):
    code, _, err = invoke(
        capsys, ["subdivide", "--lo", "1/5", "--hi", "1/2", "--order", "5", "--gap", "1/7"]
    )
    assert code == 1 and "error" in err


def test_solve_feasible(tmp_path, capsys):
    path = write(tmp_path, "feasible.txt", "# two targets, one denominator\n1/3 1\n2/3 1\n")
    code, out, _ = invoke(capsys, ["solve", "--input", path, "--epsilon", "1/10"])
    assert code == 0
    obj = json.loads(out)
    assert obj["method"] == "brute"
    assert obj["q"] == 3
    assert obj["ps"] == [1, 2]
    assert obj["errors"] == ["0/1", "0/1"]
    assert obj["epsilon"] == "1/10"
    assert obj["precision"] == 64


def test_solve_infeasible(tmp_path, capsys):
    path = write(tmp_path, "infeasible.txt", "3/7 1/2\n")
    code, out, _ = invoke(capsys, ["solve", "--input", path, "--epsilon", "1/8"])
    assert code == 2
    obj = json.loads(out)
    assert obj["infeasible"] is True and "reason" in obj


def test_solve_malformed_input(tmp_path, capsys):
    path = write(tmp_path, "bad.txt", "1/2 1\noops\n")
    code, out, err = invoke(capsys, ["solve", "--input", path, "--epsilon", "1/8"])
    assert code == 1 and out == ""
    assert ":2:" in err  # line number reported


def test_solve_missing_file(capsys):
    code, out, err = invoke(capsys, ["solve", "--input", "no-such-file.txt", "--epsilon", "1/10"])
    assert code == 1 and out == "" and err != ""


def test_solve_compose_method(tmp_path, capsys):
    path = write(tmp_path, "pair.txt", "1/3 1\n1/7 1\n")
    code, out, _ = invoke(capsys, ["solve", "--input", path, "--epsilon", "1/10", "--method", "compose"])
    assert code == 0
    obj = json.loads(out)
    assert obj["method"] == "compose"
    assert obj["q"] == 21
    assert obj["satisfies_constraints"] is False


def test_precision_flag_applies_and_is_echoed(tmp_path, capsys):
    path = write(tmp_path, "pi.txt", "pi 1\n")
    code, out, _ = invoke(
        capsys, ["solve", "--input", path, "--epsilon", "1/10", "--precision", "3"]
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["precision"] == 3
    # pi truncated to 3 digits is 3141/1000, matched exactly at q = 1000
    assert obj["q"] <= 1000
    code, out2, _ = invoke(
        capsys, ["solve", "--input", path, "--epsilon", "1/10", "--precision", "6"]
    )
    assert json.loads(out2)["q"] != obj["q"] or json.loads(out2) != obj


def test_dirichlet_command(tmp_path, capsys):
    path = write(tmp_path, "one.txt", "phi 1\n")
    code, out, _ = invoke(capsys, ["dirichlet", "--input", path, "--T", "3"])
    assert code == 0
    obj = json.loads(out)
    assert obj["method"] == "dirichlet"
    assert obj["T"] == 3
    assert obj["q"] == 2


def test_sweep_json_and_exit_codes(tmp_path, capsys):
    path = write(tmp_path, "half.txt", "1/2 1\n")
    code, out, _ = invoke(capsys, ["sweep", "--input", path, "--grid", "1/2,1/4,1/8"])
    assert code == 0
    obj = json.loads(out)
    assert obj["grid"] == ["1/2", "1/4", "1/8"]
    assert obj["feasible"] == [True, True, True]
    assert obj["epsilon0"] == "1/2"
    assert obj["witnesses"][0]["q"] == 1

    bad = write(tmp_path, "hard.txt", "3/7 1/2\n")
    code, out, _ = invoke(capsys, ["sweep", "--input", bad, "--grid", "1/4,1/8"])
    assert code == 2
    assert json.loads(out)["epsilon0"] is None


def test_sweep_csv(tmp_path, capsys):
    path = write(tmp_path, "half.txt", "1/2 1\n")
    code, out, _ = invoke(capsys, ["sweep", "--input", path, "--grid", "1/2,1/4", "--csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "epsilon,feasible,q,max_error"
    assert lines[1] == "1/2,true,1,1/2"
    assert lines[2] == "1/4,true,2,0/1"


def test_sweep_generated_grids(tmp_path, capsys):
    path = write(tmp_path, "half.txt", "1/2 1\n")
    code, out, _ = invoke(
        capsys,
        ["sweep", "--input", path, "--eps-max", "1/2", "--eps-min", "1/8", "--points", "4"],
    )
    assert code == 0
    assert json.loads(out)["grid"] == ["1/2", "3/8", "1/4", "1/8"]

    code, out, _ = invoke(
        capsys,
        ["sweep", "--input", path, "--eps-max", "1/2", "--eps-min", "1/8",
         "--points", "3", "--geometric"],
    )
    assert code == 0
    grid = [F(g.replace("/", "") and g) for g in json.loads(out)["grid"]]
    assert grid[0] == F(1, 2) and grid[-1] == F(1, 8)
    assert all(a > b for a, b in zip(grid, grid[1:]))
    # middle point approximates the geometric mean 1/4
    assert abs(grid[1] - F(1, 4)) < F(1, 10**6)


def test_sweep_grid_validation(tmp_path, capsys):
    path = write(tmp_path, "half.txt", "1/2 1\n")
    code, _, err = invoke(capsys, ["sweep", "--input", path, "--grid", "1/8,1/4"])
    assert code == 1 and "descending" in err
    code, _, err = invoke(capsys, ["sweep", "--input", path])
    assert code == 1


def test_compare_command(tmp_path, capsys):
    path = write(tmp_path, "pair.txt", "1/3 1\n2/3 1\n")
    code, out, _ = invoke(capsys, ["compare", "--input", path, "--epsilon", "1/10", "--T", "4"])
    assert code == 0
    obj = json.loads(out)
    assert obj["constrained"]["q"] == 3
    assert obj["q_bound_constrained"] == "10/1"
    assert obj["q_bound_dirichlet"] == 16
    assert obj["dirichlet_T"] == 4
    assert obj["max_error_constrained"] == "0/1"


def test_compare_non_uniform_weights(tmp_path, capsys):
    path = write(tmp_path, "mixed.txt", "1/3 1\n2/3 2\n")
    code, _, err = invoke(capsys, ["compare", "--input", path, "--epsilon", "1/10", "--T", "4"])
    assert code == 1 and "uniform" in err


def test_comments_and_blank_lines(tmp_path, capsys):
    path = write(tmp_path, "commented.txt", "\n# header\n1/2 1  # trailing\n\n")
    code, out, _ = invoke(capsys, ["solve", "--input", path, "--epsilon", "1/4"])
    assert code == 0
    assert json.loads(out)["q"] == 2


def test_scan_budget_env(tmp_path, capsys, monkeypatch):
    path = write(tmp_path, "sqrt2.txt", "sqrt2 1\n")
    monkeypatch.setenv("FAREY_APPROX_MAX_SCAN", "5")
    code, out, err = invoke(capsys, ["solve", "--input", path, "--epsilon", "1/1000"])
    assert code == 1 and out == ""
    assert "budget exceeded" in err

    monkeypatch.setenv("FAREY_APPROX_MAX_SCAN", "bogus")
    code, _, err = invoke(capsys, ["solve", "--input", path, "--epsilon", "1/1000"])
    assert code == 1 and "FAREY_APPROX_MAX_SCAN" in err


def test_usage_errors(capsys):
    assert invoke(capsys, [])[0] == 1
    assert invoke(capsys, ["farey"])[0] == 1  # missing --order
    assert invoke(capsys, ["farey", "--order", "5", "--bogus"])[0] == 1
    assert invoke(capsys, ["nonsense"])[0] == 1
    assert invoke(capsys, ["--help"])[0] == 0


def test_selftest_passes_and_is_deterministic(capsys):
    code1, out1, _ = invoke(capsys, ["selftest"])
    code2, out2, _ = invoke(capsys, ["selftest"])
    assert code1 == code2 == 0
    assert out1 == out2
    assert "all passed" in out1
    assert "checks run" in out1


def test_selftest_fault_injection(capsys, monkeypatch):
    from fractions import Fraction

    import fareyapprox.mediants as mediants

    true_gap = mediants.descending_step_gap

    def corrupted(base, i):
        return true_gap(base, i) + Fraction(1, 10**9)

    monkeypatch.setattr(mediants, "descending_step_gap", corrupted)
    code, out, _ = invoke(capsys, ["selftest"])
    assert code == 1
    assert "FAIL" in out
    assert "descending step gap" in out


def test_sweep_determinism(tmp_path, capsys):
    path = write(tmp_path, "mix.txt", "sqrt2 1\n1/3 1\n")
    argv = ["sweep", "--input", path, "--grid", "1/2,1/4,1/8,1/16"]
    code1, out1, _ = invoke(capsys, argv)
    code2, out2, _ = invoke(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["epsilon0"] == "1/2"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fareyapprox", "farey", "--order", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["0/1", "1/2", "1/1"]
