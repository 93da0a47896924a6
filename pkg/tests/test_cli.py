import json
import math
import subprocess
import sys

import pytest

from trishape.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_right_isosceles(capsys):
    code, out, _ = run_cli(capsys, "classify", "--vertices", "0,0", "1,0", "0,1")
    assert code == 0
    data = json.loads(out)
    assert data["degeneracy"] == "Nondegenerate"
    assert data["orientation"] == "Positive"
    assert abs(data["angles"][0] - math.pi / 2) < 1e-9
    assert abs(data["angles"][1] - math.pi / 4) < 1e-9


def test_classify_csv_format(capsys):
    code, out, _ = run_cli(
        capsys, "classify", "--format", "csv", "--vertices", "0,0", "1,0", "0,1"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "degeneracy,orientation,alpha,beta,gamma"
    assert lines[1].startswith("Nondegenerate,Positive,")


def test_project_sphere_equilateral(capsys):
    code, out, _ = run_cli(
        capsys, "project", "--model", "sphere",
        "--vertices", "0,0", "1,0", f"0.5,{math.sin(math.pi / 3)}",
    )
    assert code == 0
    data = json.loads(out)
    assert abs(data["x"]) < 1e-9
    assert abs(data["y"] + 1.0) < 1e-9
    assert abs(data["z"]) < 1e-9
    assert "EquilateralPlus" in data["loci"]


def test_project_torus(capsys):
    code, out, _ = run_cli(
        capsys, "project", "--model", "torus", "--vertices", "0,1", "0,0", "1,0"
    )
    assert code == 0
    data = json.loads(out)
    vals = sorted((data["p"], data["q"], data["r"]))
    assert abs(vals[2] - math.pi / 2) < 1e-9


def test_orbit_sizes(capsys):
    code, out, _ = run_cli(capsys, "orbit", "--vertices", "0,0", "1,0", "0.3,0.9")
    assert code == 0
    assert json.loads(out)["size"] == 12


def test_separate_verdicts(capsys):
    code, out, _ = run_cli(
        capsys, "separate", "--pair", "constant-angle:1.5707963267948966,2.0943951023931953",
        "--model", "torus",
    )
    assert code == 0
    assert json.loads(out)["verdict"] == "Separated"
    code, out, _ = run_cli(
        capsys, "separate", "--pair", "constant-angle:1.5707963267948966,2.0943951023931953",
        "--model", "sphere",
    )
    assert json.loads(out)["verdict"] == "Merged"
    code, out, _ = run_cli(
        capsys, "separate", "--pair", "constant-ratio:1,2", "--model", "torus"
    )
    assert json.loads(out)["verdict"] == "Merged"


def test_poncelet_command(capsys):
    code, out, _ = run_cli(
        capsys, "poncelet", "--r", "0.5", "--R", "2.0", "--samples", "8"
    )
    assert code == 0
    data = json.loads(out)
    for row in data["orbit"]:
        assert row["tangency_residual"] < 1e-8
        assert abs(row["r_over_R"] - 0.25) < 1e-9


def test_trace_constant_angle(capsys):
    code, out, _ = run_cli(
        capsys, "trace", "--family", "constant-angle", "--param", "1.0",
        "--samples", "5", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("t,class,x,y,z,p,q,r")
    assert len(lines) == 6


def test_domain_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "classify", "--vertices", "0,0", "bogus", "0,1")
    assert code == 1
    assert "error" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--no-such-flag"])
    assert exc.value.code == 2


def test_triple_point_requires_directions(capsys):
    code, _, err = run_cli(capsys, "classify", "--vertices", "0,0", "0,0", "0,0")
    assert code == 1
    code, out, _ = run_cli(
        capsys, "classify", "--vertices", "0,0", "0,0", "0,0",
        "--directions", "1", "0", "-0.5", "0.5", "-0.5", "-0.5",
    )
    assert code == 0
    assert json.loads(out)["degeneracy"] == "Triple"


def test_emit_figure_deterministic(capsys):
    outputs = []
    for _ in range(2):
        code, out, _ = run_cli(
            capsys, "emit-figure", "--name", "sphere-atlas", "--grid", "10"
        )
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]
    for _ in range(2):
        code, out, _ = run_cli(
            capsys, "emit-figure", "--name", "poncelet-levels",
            "--levels", "0.1,0.3,0.5", "--grid", "20",
        )
        assert code == 0
        outputs.append(out)
    assert outputs[2] == outputs[3]
    assert outputs[2].startswith("level,alpha,beta,gamma")


def test_emit_figure_torus_atlas_sheets(capsys):
    code, out, _ = run_cli(capsys, "emit-figure", "--name", "torus-atlas", "--grid", "10")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "index,p,q,r,sheet"
    sheets = {line.rsplit(",", 1)[1] for line in lines[1:]}
    assert sheets <= {"pi", "2pi"}
    assert len(sheets) == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "trishape.cli", "classify",
         "--vertices", "0,0", "1,0", "0,1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["degeneracy"] == "Nondegenerate"
