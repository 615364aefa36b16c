"""One pass/fail line per acceptance criterion, printed in the terminal summary."""
from __future__ import annotations

import subprocess
import sys
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from spinorlab import weinberg as W
from spinorlab.suites import run_suite


def record(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def timed(name: str, samples: int | None = None):
    t0 = time.perf_counter()
    rep = run_suite(name, 7, samples)
    return rep, time.perf_counter() - t0


def test_criterion_1_dirac():
    rep, dt = timed("dirac", 1000)
    worst = max(c.max_residual for c in rep.checks if c.tol == 1e-10)
    ok = rep.passed and worst <= 1e-10 and dt < 1.0
    record(1, ok, f"Dirac, 1000 momenta, 3 bases: max residual {worst:.1e}, {dt:.2f} s")
    assert ok


def test_criterion_2_majorana():
    rep, dt = timed("majorana", 1000)
    needed = ["S_c lambda^S = +lambda^S, S_c lambda^A = -lambda^A (and rho)", "rho^S_up = -i lambda^A_down",
              "rho^S_down = +i lambda^A_up", "rho^A_up = +i lambda^S_down", "rho^A_down = -i lambda^S_up",
              "lambda bi-orthonormal products", "rho bi-orthonormal products",
              "P lambda^{S,A} = rho^{A,S} (same eta)", "lambda = c sqrt(m) M (u, v)"]
    ok = all(rep[n].passed for n in needed) and dt < 2.0
    record(2, ok, f"Majorana, 1000 momenta: {len(needed)} identity groups, {dt:.2f} s")
    assert ok


def test_criterion_3_coupled_equations():
    rep, _ = timed("majorana", 1000)
    names = ["i g.d lambda^S - m rho^A", "i g.d rho^A - m lambda^S", "i g.d lambda^A + m rho^S",
             "i g.d rho^S + m lambda^A", "[Gamma.p - m] Psi_+ = 0", "[-Gamma.p + m] Psi_- = 0"]
    worst = max(rep[n].max_residual for n in names)
    unique = rep["unique frequency-sign convention"]
    ok = worst <= 1e-10 and unique.passed
    record(3, ok, f"one frequency-sign convention of 16 works: max residual {worst:.1e}")
    assert ok


def test_criterion_4_fock():
    rep, _ = timed("fock")
    ok = rep.passed and all(c.max_residual == 0 for c in rep.checks)
    record(4, ok, "exact phase arithmetic; C eigenvalues -+i; no 1- or 2-term P/U^c eigenstate")
    assert ok


def test_criterion_5_maxwell():
    rep, _ = timed("maxwell", 100)
    roots = rep["Det[E -+ S.p] roots = {-|p|, 0, +|p|}"]
    kg = rep["spin-1 KG factorisation = (E^2 - p^2 - m^2) psi"]
    ok = roots.max_residual <= 1e-12 and roots.passed and kg.max_residual == 0 and kg.passed
    record(5, ok, f"100 momenta: root error {roots.max_residual:.1e}; KG factorisation exact")
    assert ok


def test_criterion_6_weinberg_attainable_part():
    rep, dt = timed("weinberg", 1000)
    names = ["(A,B) = (1,2) operator annihilates u; (-1,-2) annihilates v", "boson parity u +1, v -1",
             "(1,2): every root has E^2 = p^2 + m^2", "(1,2): no E = 0 root for p != 0"]
    ok = all(rep[n].passed for n in names) and dt < 5.0
    record(6, False, f"partial: annihilation, parity, (1,2) dispersion hold in {dt:.2f} s; "
                     "degree 12 and the generic B/(A+1)=1 family do not (xfail, see ledger)")
    assert ok


@pytest.mark.xfail(strict=True, reason="at A = 1 the (A-1) factor is constant, so the degree is 6")
def test_criterion_6_degree_twelve_at_tucker_hammer():
    assert W.dispersion_spectrum(1, 2, [0.4, -0.3, 0.8], 1.0).degree == 12


@pytest.mark.xfail(strict=True, reason="B/(A+1)=1 with A != 1 has the extra branch x = (A+1)m^2/(A-1)")
def test_criterion_6_family_relativistic_at_generic_point():
    d = W.dispersion_spectrum(2, 3, [0.4, -0.3, 0.8], 1.0)
    assert d.all_relativistic


def test_criterion_7_mode_expansion():
    rep, _ = timed("modeexpand", 1000)
    gram = rep["vbar(k) u(-k) = -i m sigma.n (four-vector reflection)"]
    ok = (gram.max_residual <= 1e-10 and rep["(i sigma.n)(-i sigma.n) = I"].passed
          and rep["[1 - 2(S.n)^2]^2 = I"].passed and any("b-matrix" in n for n in rep.notes)
          and any("a-matrix" in n for n in rep.notes))
    summary = ", ".join(n.split(":")[0] + " " + n.split(";")[1].split()[0] for n in rep.notes
                        if n.startswith(("a-matrix: best", "b-matrix: best")))
    record(7, ok, f"cross-Gram residual {gram.max_residual:.1e}; exact identities hold; printed-matrix agreement {summary}")
    assert ok


def test_criterion_8_determinism():
    cmd = [sys.executable, "-m", "spinorlab", "verify", "--suite", "all", "--seed", "7"]
    outs, times = [], []
    for _ in range(2):
        t0 = time.perf_counter()
        proc = subprocess.run(cmd, capture_output=True)
        times.append(time.perf_counter() - t0)
        outs.append(proc.stdout)
        # the weinberg suite records the two failing claims, so the exit status is 1
        assert proc.returncode == 1
    ok = outs[0] == outs[1] and max(times) < 15.0 and len(outs[0]) > 0
    record(8, ok, f"byte-identical JSON ({len(outs[0])} bytes), {max(times):.1f} s per run")
    assert ok
