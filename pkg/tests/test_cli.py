import json

import pytest

from biaxial.cli import main


def run(args):
    return main(args)


def test_verify_algebra_json_schema(tmp_path):
    out = tmp_path / "report.json"
    code = run(["verify", "algebra", "--p", "2", "--q", "2", "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert list(payload.keys()) == ["suite", "checks", "config"]
    assert payload["suite"] == "algebra"
    for check in payload["checks"]:
        assert list(check.keys()) == ["name", "measured", "tolerance", "pass"]
        assert check["pass"] is True


def test_verify_funkhecke_passes(tmp_path):
    out = tmp_path / "fh.json"
    code = run(["verify", "funkhecke", "--p", "3", "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert all(c["measured"] < 1e-8 for c in payload["checks"])


def test_verify_unknown_suite_usage_error():
    with pytest.raises(SystemExit) as exc:
        run(["verify", "nosuchsuite"])
    assert exc.value.code == 2


def test_config_validation_exit_codes(tmp_path, capsys):
    out = tmp_path / "never.json"
    assert run(["verify", "algebra", "--p", "1", "--out", str(out)]) == 2
    assert run(["verify", "algebra", "--p", "4", "--q", "6", "--out", str(out)]) == 2
    assert run(["verify", "algebra", "--res", "4", "--out", str(out)]) == 2
    assert run(["verify", "algebra", "--h", "0.5", "--out", str(out)]) == 2
    assert run(["verify", "algebra", "--s", "0,0", "--out", str(out)]) == 2
    err = capsys.readouterr().err
    assert "error" in err
    # Validation failures must never leave a partial output file behind.
    assert not out.exists()


def test_eval_csv_grid(tmp_path):
    out = tmp_path / "table.csv"
    code = run([
        "eval", "exp-hpw", "--p", "2", "--q", "2", "--grid-r", "0:1:3",
        "--grid-t=-0.5:0.5:3", "--format", "csv", "--out", str(out),
    ])
    assert code == 0
    lines = out.read_text().split("\n")
    header = lines[0].split(",")
    assert header[:4] == ["x1", "x2", "y1", "y2"]
    assert "scalar_re" in header and "e1e3_re" in header
    assert len([ln for ln in lines if ln]) == 1 + 9


def test_eval_axis_row_is_plain_exponential(tmp_path):
    import math

    out = tmp_path / "axis.json"
    code = run([
        "eval", "exp-hpw", "--p", "2", "--q", "2", "--grid-r", "0:0:1",
        "--grid-t", "0.5:0.5:1", "--out", str(out),
    ])
    assert code == 0
    payload = json.loads(out.read_text())
    row = dict(zip(payload["columns"], payload["rows"][0]))
    assert abs(row["scalar_re"] - math.exp(0.5)) < 1e-14
    assert row["e1e3_re"] == 0.0


def test_eval_nonconvergent_grid_is_structured_error(tmp_path, capsys):
    out = tmp_path / "never.json"
    code = run([
        "eval", "ck", "--p", "2", "--q", "2", "--J", "10",
        "--grid-r", "5:5:1", "--grid-t", "0:0:1", "--out", str(out),
    ])
    assert code == 2
    assert "error" in capsys.readouterr().err
    assert not out.exists()


def test_kernel_table_monotone_toward_boundary(tmp_path):
    out = tmp_path / "mono.json"
    code = run([
        "kernel-table", "--p", "2", "--q", "2", "--grid-r", "0:0.6:4",
        "--grid-theta", "0:0:1", "--res", "64", "--out", str(out),
    ])
    assert code == 0
    payload = json.loads(out.read_text())
    closed = [row[2] for row in payload["rows"]]
    # At theta=0, y=0 the evaluation point approaches the boundary sample
    # as r grows, so the kernel increases.
    assert all(a < b for a, b in zip(closed, closed[1:]))


def test_eval_poly_uses_degree(tmp_path):
    out = tmp_path / "poly.json"
    code = run([
        "eval", "poly", "--k", "3", "--p", "2", "--q", "2",
        "--grid-r", "0.2:0.8:2", "--grid-t", "0:0:1", "--out", str(out),
    ])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["field"] == "poly"
    assert payload["config"]["k"] == 3
    assert len(payload["rows"]) == 2


def test_kernel_table_pass_and_tolerance_failure(tmp_path):
    out = tmp_path / "kernel.csv"
    base = [
        "kernel-table", "--p", "2", "--q", "2", "--grid-r", "0:0.4:3",
        "--grid-theta", "0:1.5:3", "--res", "32", "--format", "csv",
    ]
    assert run(base + ["--out", str(out)]) == 0
    rows = [ln.split(",") for ln in out.read_text().strip().split("\n")[1:]]
    assert all(float(row[4]) < 1e-8 for row in rows)
    assert run(base + ["--tol", "1e-18", "--out", str(out)]) == 1


def test_kernel_table_domain_validation(tmp_path):
    code = run([
        "kernel-table", "--p", "2", "--q", "2", "--grid-r", "0:0.9:3",
        "--y", "0.5,0.0", "--out", str(tmp_path / "x.csv"),
    ])
    assert code == 2


def test_reconstruct_report_columns(tmp_path):
    out = tmp_path / "rec.json"
    code = run([
        "reconstruct", "--field", "constant", "--p", "2", "--q", "2",
        "--points", "0.3,0;0,0", "--res", "24", "--out", str(out),
    ])
    assert code == 0
    payload = json.loads(out.read_text())
    cols = payload["columns"]
    row = dict(zip(cols, payload["rows"][0]))
    # Corrected assembly reproduces the constant; the reduced integrand
    # misses it by the structural defect.
    assert row["err_A_corrected"] < 1e-6
    assert row["err_A_full"] > 1e-3
    assert row["err_fullball_corrected"] < 1e-5


def test_verify_cauchy_reports_reduction_defect(tmp_path):
    out = tmp_path / "cauchy.json"
    code = run([
        "verify", "cauchy", "--p", "2", "--q", "2", "--res", "32", "--out", str(out),
    ])
    # The reduced-integrand checks fail by construction, so the suite
    # reports a nonzero exit while the corrected checks pass.
    assert code == 1
    payload = json.loads(out.read_text())
    by_name = {c["name"]: c for c in payload["checks"]}
    assert by_name["reconstruct_corrected_vs_direct_exp_hpw"]["pass"] is True
    assert by_name["reconstruct_reduced_vs_direct_exp_hpw"]["pass"] is False


def test_stdout_output(capsys):
    code = run(["verify", "algebra", "--p", "2", "--q", "2"])
    assert code == 0
    out = capsys.readouterr().out
    payload = json.loads(out)
    assert payload["suite"] == "algebra"
