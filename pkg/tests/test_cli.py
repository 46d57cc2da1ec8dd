import csv
import io
import json
import math
import subprocess
import sys

import pytest

from realforms import cli
from realforms.theorem import TheoremReport


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv)
    assert code == 0, err
    return json.loads(out)


def test_roots_json():
    d = run_json("roots", "x^2*y + x*y^2")
    assert d["schemaVersion"] == 1
    assert (d["realProjectiveRoots"], d["rootAtInfinity"], d["allRealDistinct"]) == (3, True, True)
    assert len(d["intervals"]) == 2


def test_roots_from_coefficient_json_and_file(tmp_path):
    d = run_json("roots", '{"degree": 3, "coeffs": ["1", "0", "-3", "0"]}', "--width", "1/1000")
    assert d["realProjectiveRoots"] == 3
    path = tmp_path / "form.txt"
    path.write_text("x^3 + y^3\n")
    assert run_json("roots", "--file", str(path))["realProjectiveRoots"] == 1


def test_disc_and_hessian():
    d = run_json("disc", "x^2 - y^2")
    assert (d["discriminant"], d["resultantGradient"]) == ("4", "-4")
    d = run_json("hessian", "x^2*y + x*y^2")
    assert d["hessian"] == "-4*x^2 - 4*x*y - 4*y^2"
    assert d["hessianAt10"] == "-4" and d["criterionC"] is True


def test_winding():
    d = run_json("winding", "x^2*y + x*y^2", "--steps", "4096")
    assert (d["phi"]["degree"], d["psi"]["degree"], d["phiExact"]) == (-2, -3, -2)
    assert run_json("winding", "x^3 + y^3", "--map", "phi")["phiExact"] is None


def test_rank_and_decompose():
    d = run_json("rank", "x^3 - 3*x*y^2")
    assert (d["realExact"], d["complexExact"], d["method"]) == (3, 2, "corollary_top_rank")
    d = run_json("decompose", "x^3 + y^3")
    assert d["rank"] == 2 and d["exact"] and d["residual"] == 0
    d = run_json("decompose", "x^3 - 3*x*y^2", "--apolar", "3*x^2*y - y^3")
    assert d["rank"] == 3 and not d["exact"] and d["residual"] <= 1e-8


def test_verify_with_corollary():
    d = run_json("verify", "x^2*y + x*y^2", "--corollary")
    assert d["consistent"] and d["corollary"]["realExact"] == 3


@pytest.mark.parametrize("fmt_first", [True, False])
def test_format_flag_position(fmt_first):
    argv = ["--format", "text", "verify", "x^3 + y^3"] if fmt_first else ["verify", "x^3 + y^3", "--format", "text"]
    code, out, _ = run(*argv)
    assert code == 0
    assert "criterionA: False" in out.splitlines()


def test_csv_output():
    code, out, _ = run("roots", "x^3 + y^3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and rows[0]["realProjectiveRoots"] == "1"


def test_experiment_outputs(tmp_path):
    d = run_json("experiment", "--degree", "3", "--samples", "15", "--seed", "2")
    assert d["kind"] == "typical_rank" and sum(d["rankCounts"].values()) == 15
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"degree": 4, "samples": 5, "seed": 1}))
    d = run_json("experiment", "--config", str(cfg), "--kind", "fuzz")
    assert d["kind"] == "theorem_fuzz" and d["counterexamples"] == []
    code, out, _ = run("experiment", "--degree", "3", "--samples", "10", "--format", "csv")
    assert out.splitlines()[0] == "rank_bucket,count"


def test_plot_data_rows():
    code, out, _ = run("plot-data", "x^2*y + x*y^2", "--map", "psi", "--steps", "64")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "theta,vx,vy,angular_velocity" and len(lines) == 65
    _, phi_out, _ = run("plot-data", "x^2*y + x*y^2", "--steps", "64")
    for psi_line, phi_line in zip(lines[1:], phi_out.strip().splitlines()[1:]):
        t, qx, qy, qw = map(float, psi_line.split(","))
        _, px, py, pw = map(float, phi_line.split(","))
        assert math.hypot(qx, qy) == pytest.approx(1.0, abs=1e-12)
        c, s = math.cos(-t), math.sin(-t)
        assert (qx, qy) == pytest.approx((c * px - s * py, s * px + c * py), abs=1e-12)
        assert qw == pytest.approx(pw - 1.0)


@pytest.mark.parametrize(
    "argv",
    [
        ["roots", "x^2 + y^3"],
        ["roots", "xy"],
        ["roots", '{"coeffs": [1.0, 2.0]}'],
        ["roots"],
        ["winding", "x^2*y"],
        ["rank", "x^4"],
        ["verify", "x*y"],
        ["roots", "--file", "/nonexistent/form.txt"],
        ["experiment"],
    ],
)
def test_input_errors_exit_2(argv):
    code, out, err = run(*argv)
    assert code == 2
    assert err.startswith("error:")


def test_inconsistent_report_exits_3(monkeypatch):
    bad = TheoremReport("x^3", 3, True, False, True, -2, -3, -2, False)
    monkeypatch.setattr(cli, "verify_theorem1", lambda f, steps=None: bad)
    code, out, err = run("verify", "x^2*y + x*y^2")
    assert code == 3
    assert json.loads(out)["consistent"] is False
    assert "inconsistent" in err


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "realforms.cli", "roots", "x^3 - x*y^2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["realProjectiveRoots"] == 3
