"""Relativistic spinor toolkit: Dirac and Majorana-like bispinors, Fock-space
symmetry maps, Maxwell-like and Weinberg-type equations, mode expansions."""
from __future__ import annotations

from .algebra import FourMomentum, gamma, slash
from .report import VerificationReport
from .suites import run_suite

__all__ = ["FourMomentum", "VerificationReport", "gamma", "run_suite", "slash"]
__version__ = "0.1.0"
