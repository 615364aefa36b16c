from __future__ import annotations

import json

import numpy as np
import pytest

from spinorlab.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, RunConfig, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def as_complex(pairs):
    return np.array([complex(re, im) for re, im in pairs])


def test_lambda_rest_example(capsys):
    code, out, _ = run(capsys, "spinor", "--kind", "lambda", "--class", "S", "--eta", "up",
                       "--p", "0,0,0", "--m", "2", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert np.allclose(as_complex(data["components"]), [0, 1j, 1, 0])
    assert data["max_diff"] <= 1e-12


def test_dirac_rest_example(capsys):
    code, out, _ = run(capsys, "spinor", "--kind", "u", "--sigma", "+1/2", "--p", "0,0,0", "--m", "1",
                       "--basis", "standard", "--format", "json")
    assert code == EXIT_OK
    assert np.allclose(as_complex(json.loads(out)["components"]), [1, 0, 0, 0])


@pytest.mark.parametrize("kind", ["u", "v", "u1", "v1", "rho"])
def test_spinor_kinds_match_reference(capsys, kind):
    extra = ["--class", "A", "--eta", "down"] if kind == "rho" else []
    code, out, _ = run(capsys, "spinor", "--kind", kind, "--p", "0.3,-0.2,0.5", "--m", "1.5", "--format", "json",
                       *extra)
    assert code == EXIT_OK
    assert json.loads(out)["max_diff"] <= 1e-10


def test_missing_mass_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["spinor", "--kind", "u", "--p", "0,0,0"])
    assert exc.value.code == EXIT_USAGE


def test_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nosuch"])
    assert exc.value.code == EXIT_USAGE


@pytest.mark.parametrize("argv", [
    ["spinor", "--kind", "lambda", "--p", "0,0,0", "--m", "1"],
    ["spinor", "--kind", "u", "--sigma", "1", "--m", "1"],
    ["spinor", "--kind", "u", "--basis", "helicity", "--m", "1"],
    ["spinor", "--kind", "u", "--m", "-1"],
    ["verify", "--suite", "dirac", "--tol", "0"],
    ["dispersion", "--model", "wth", "--p", "1,0,0"],
])
def test_usage_errors_exit_two(capsys, argv):
    assert main(argv) == EXIT_USAGE


def test_verify_passing_suite(capsys, tmp_path):
    target = tmp_path / "dirac.json"
    code, _, _ = run(capsys, "verify", "--suite", "dirac", "--samples", "20", "--output", str(target))
    assert code == EXIT_OK
    data = json.loads(target.read_text())
    assert data["suite"] == "dirac" and data["passed"] and "timing" not in data
    code, out, _ = run(capsys, "report", str(target), "--format", "csv")
    assert code == EXIT_OK and out.startswith("suite,identity")


def test_verify_is_deterministic(capsys):
    outs = [run(capsys, "verify", "--suite", "majorana", "--samples", "15", "--seed", "3")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_verify_weinberg_reports_failure(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "weinberg", "--samples", "5")
    assert code == EXIT_FAIL
    failed = [c["identity"] for c in json.loads(out)["checks"] if not c["passed"]]
    assert "(1,2): determinant degree 12" in failed


def test_tolerance_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SPINORLAB_TOL", "1e-30")
    code, out, _ = run(capsys, "verify", "--suite", "dirac", "--samples", "5")
    assert code == EXIT_FAIL
    assert 1e-30 in {c["tol"] for c in json.loads(out)["checks"]}


def test_text_and_timing(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "maxwell", "--samples", "5", "--format", "text", "--timing")
    assert code == EXIT_OK and out.startswith("suite maxwell: PASS") and "time:" in out


def test_maxwell_dispersion(capsys):
    code, out, _ = run(capsys, "dispersion", "--model", "maxwell", "--p", "0,0,1", "--format", "json")
    data = json.loads(out)
    for sign in (1, -1):
        es = sorted(r["energy"] for r in data["roots"] if r["sign"] == sign)
        assert np.allclose(es, [-1, 0, 1])


def test_wth_dispersion(capsys):
    code, out, _ = run(capsys, "dispersion", "--model", "wth", "--A", "1", "--B", "2", "--p", "1,0,0", "--m", "1",
                       "--format", "json")
    data = json.loads(out)
    assert data["all_relativistic"] and not data["zero_root"]
    for r in data["roots"]:
        e = complex(*r["energy"])
        assert abs(e * e - 2) < 1e-8


def test_weinberg_case_flagged(capsys):
    code, out, _ = run(capsys, "dispersion", "--model", "wth", "--A", "0", "--B", "1", "--p", "1,0,0", "--m", "1",
                       "--format", "json")
    data = json.loads(out)
    assert not data["all_relativistic"] and data["zero_root"]


def test_barut_golden_ratio(capsys):
    code, out, _ = run(capsys, "dispersion", "--model", "barut", "--alpha", "1", "--beta", "1", "--m", "1",
                       "--format", "json")
    masses = sorted(r["mass"] for r in json.loads(out)["roots"])
    assert np.allclose(masses, [(np.sqrt(5) - 1) / 2, (np.sqrt(5) + 1) / 2])


def test_report_unreadable_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["report", str(bad)]) == EXIT_USAGE


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig("verify", tolerance=-1.0)
    with pytest.raises(ValueError):
        RunConfig("verify", samples=0)
