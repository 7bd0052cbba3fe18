"""Smoke tests driving the ctxlab CLI as a subprocess."""

import json

from conftest import run_cli


def test_version(cli):
    r = run_cli(cli, "version")
    assert r.returncode == 0
    assert r.stdout.startswith("ctxlab ")


def test_check_set_independent(cli, tmp_path):
    states = [
        {"bloch": {"theta": 0.0, "phi": 0.0}},
        {"bloch": {"theta": 1.5707963267948966, "phi": 0.0}},
        {"bloch": {"theta": 0.7853981633974483, "phi": 0.0}},
    ]
    path = tmp_path / "independent.json"
    path.write_text(json.dumps(states))
    r = run_cli(cli, "check-set", path)
    assert r.returncode == 0
    verdict = json.loads(r.stdout)
    assert verdict["verdict"] == "NONCONTEXTUAL_INDEPENDENT"
    assert verdict["certificate"] is None


def test_check_set_dependent_exit_code(cli, configs_dir):
    # The bundled antipodes file holds |0>, |1>, |+>, |->: rank three.
    r = run_cli(cli, "check-set", configs_dir / "states" / "antipodes.json")
    assert r.returncode == 1
    verdict = json.loads(r.stdout)
    assert verdict["verdict"] == "CONTEXTUAL_DEPENDENT"
    assert verdict["rank"] == 3
    assert len(verdict["certificate"]) == 4


def test_bad_config_exit_code(cli, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{ not json")
    r = run_cli(cli, "run", path, "-o", tmp_path / "report.json")
    assert r.returncode == 2

    missing = tmp_path / "missing.json"
    missing.write_text(json.dumps({"name": "x", "map_kind": "DEUTSCH"}))
    r = run_cli(cli, "run", missing, "-o", tmp_path / "report.json")
    assert r.returncode == 2


def test_sn_phase_numerical_error_exit_code(cli, tmp_path):
    # Two time steps cannot satisfy the internal grid-refinement check for a
    # configuration with a sign-flipping force profile.
    cfg = {
        "mass": 1e-17,
        "reg_radius": 1e-7,
        "a0": 1e-14,
        "time_grid": [0.0, 0.5, 1.0],
        "force_up": [2e-23, -2e-23],
        "force_down": [-2e-23, 2e-23],
    }
    path = tmp_path / "sn.json"
    path.write_text(json.dumps(cfg))
    r = run_cli(
        cli, "sn-phase", path, "--alpha2", "0.5", "-o", tmp_path / "out.csv",
        "--eps-sn-conv", "1e-30",
    )
    assert r.returncode == 3
    assert "numerical error" in r.stderr


def test_sn_phase_csv(cli, configs_dir, tmp_path):
    out = tmp_path / "sn.csv"
    r = run_cli(
        cli, "sn-phase", configs_dir / "sn" / "pulse.json",
        "--alpha2", "0.75", "-o", out,
    )
    assert r.returncode == 0
    lines = out.read_text().splitlines()
    header = next(l for l in lines if not l.startswith("#"))
    assert header.split(",")[:3] == ["t", "phi_up", "phi_down"]
    assert len([l for l in lines if not l.startswith("#")]) > 2


def test_run_deterministic_reports(cli, configs_dir, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (a, b):
        r = run_cli(cli, "run", configs_dir / "weinberg_meridian.json",
                    "-o", out)
        assert r.returncode == 0
    assert a.read_bytes() == b.read_bytes()
    report = json.loads(a.read_text())
    assert report["transition"]
    tags = [c["tag"] for c in report["checkpoints"]]
    assert tags[0] == "0"


def test_run_trajectory_csv(cli, configs_dir, tmp_path):
    report = tmp_path / "report.json"
    traj = tmp_path / "traj.csv"
    r = run_cli(cli, "run", configs_dir / "deutsch_antipodes.json",
                "-o", report, "--trajectory", traj)
    assert r.returncode == 0
    lines = [l for l in traj.read_text().splitlines() if not l.startswith("#")]
    assert lines[0] == "t,label,x,y,z"
