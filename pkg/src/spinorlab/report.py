"""Structured records of identity checks and their JSON/CSV/text renderings."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np


@dataclass
class IdentityCheck:
    identity: str
    anchor: str
    max_residual: float
    passed: bool
    tol: float | None = None
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "anchor": self.anchor,
            "max_residual": _encode(self.max_residual),
            "tol": self.tol,
            "passed": bool(self.passed),
            "details": _encode(self.details),
        }


@dataclass
class VerificationReport:
    suite: str
    checks: list[IdentityCheck] = field(default_factory=list)
    timing: float | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, identity: str, anchor: str, max_residual: float, tol: float | None = None,
            passed: bool | None = None, **details) -> IdentityCheck:
        """Record a check. ``passed`` defaults to ``max_residual <= tol``."""
        if passed is None:
            if tol is None:
                raise ValueError("need either tol or an explicit passed flag")
            passed = bool(max_residual <= tol)
        check = IdentityCheck(identity, anchor, float(max_residual), bool(passed), tol, details)
        self.checks.append(check)
        return check

    def extend(self, other: VerificationReport) -> None:
        self.checks.extend(other.checks)
        self.notes.extend(other.notes)

    def __getitem__(self, identity: str) -> IdentityCheck:
        for c in self.checks:
            if c.identity == identity:
                return c
        raise KeyError(identity)

    def failures(self) -> list[IdentityCheck]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "notes": list(self.notes),
        }
        if timing:
            out["timing"] = self.timing
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "identity", "anchor", "max_residual", "tol", "passed"])
        for c in self.checks:
            w.writerow([self.suite, c.identity, c.anchor, repr(c.max_residual), c.tol, c.passed])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            flag = "ok  " if c.passed else "FAIL"
            lines.append(f"  [{flag}] {c.identity:<44s} residual={c.max_residual:.3e}  ({c.anchor})")
        lines.extend(f"  note: {n}" for n in self.notes)
        if self.timing is not None:
            lines.append(f"  time: {self.timing:.3f} s")
        return "\n".join(lines)


def report_from_dict(data: dict) -> VerificationReport:
    rep = VerificationReport(data["suite"], notes=list(data.get("notes", [])), timing=data.get("timing"))
    for c in data["checks"]:
        rep.checks.append(
            IdentityCheck(c["identity"], c["anchor"], float(c["max_residual"]), c["passed"],
                          c.get("tol"), c.get("details", {}))
        )
    return rep


def _encode(x):
    """JSON-safe copy: complex -> [re, im], arrays -> nested lists."""
    if isinstance(x, dict):
        return {str(k): _encode(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_encode(v) for v in x]
    if isinstance(x, np.ndarray):
        return _encode(x.tolist())
    if isinstance(x, (complex, np.complexfloating)):
        return [_encode(float(x.real)), _encode(float(x.imag))]
    if isinstance(x, (np.bool_, bool)):
        return bool(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if math.isnan(x) or math.isinf(x):
            return str(x)
        return x
    return x
