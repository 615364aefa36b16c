from __future__ import annotations

import json

import numpy as np
import pytest

from spinorlab.report import VerificationReport, _encode, report_from_dict


def sample():
    rep = VerificationReport("demo", notes=["a note"])
    rep.add("x = y", "anchor one", 1e-12, 1e-10, z=1 + 2j, arr=np.arange(2))
    rep.add("u = v", "anchor two", 0.5, 1e-10)
    return rep


def test_pass_flag_and_failures():
    rep = sample()
    assert not rep.passed
    assert [c.identity for c in rep.failures()] == ["u = v"]


def test_add_needs_tol_or_flag():
    with pytest.raises(ValueError):
        VerificationReport("x").add("a", "b", 0.0)


def test_json_round_trip():
    rep = sample()
    data = json.loads(rep.to_json())
    assert data["checks"][0]["details"]["z"] == [1.0, 2.0]
    back = report_from_dict(data)
    assert back.to_json() == rep.to_json()


def test_timing_only_when_requested():
    rep = sample()
    rep.timing = 0.25
    assert "timing" not in json.loads(rep.to_json())
    assert json.loads(rep.to_json(timing=True))["timing"] == 0.25


def test_csv_and_text():
    rep = sample()
    rows = rep.to_csv().splitlines()
    assert rows[0] == "suite,identity,anchor,max_residual,tol,passed"
    assert len(rows) == 3
    text = rep.to_text()
    assert text.startswith("suite demo: FAIL") and "note: a note" in text


def test_encode_special_values():
    assert _encode(float("nan")) == "nan"
    assert _encode(np.complex128(1j)) == [0.0, 1.0]
    assert _encode({"k": (np.int64(3), np.bool_(True))}) == {"k": [3, True]}
