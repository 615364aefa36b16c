"""Dirac u/v spinors in the chiral, standard and helicity bases.

Normalisation follows the convention ubar u = +1, vbar v = -1, ubar v = 0, i.e.
the rest spinors in the standard representation are unit columns.  Chiral
spinors are u = (phi_R(p), phi_L(p)) with phi_R(0) = phi_L(0) = chi / sqrt(2)
boosted by exp(+sigma.phi/2) and exp(-sigma.phi/2); v = gamma^5 u.  The
standard basis is the unitary image U u of the chiral one, and the helicity
basis uses the same gamma table with sigma.n eigenspinors in place of the
fixed spin-up/down two-spinors.

All ``*_components`` helpers are batched: ``p3`` has shape (..., 3) and ``m``
broadcasts against it.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    CHIRAL_TO_STANDARD,
    BASES,
    FourMomentum,
    _half_boost,
    default_tol,
    energies,
    gamma,
    sigma_dot,
    slash,
)

log = logging.getLogger(__name__)

SIGMAS = (0.5, -0.5)
KINDS = ("u", "v")


def helicity_two_spinors(n, convention: str = "standard") -> tuple[np.ndarray, np.ndarray]:
    """Eigenspinors of sigma.n with eigenvalues +1 and -1, batched over n (..., 3).

    ``standard``: chi_+ = (cos t/2, e^{i f} sin t/2), chi_- = (-e^{-i f} sin t/2, cos t/2),
    which reduce to (1, 0) and (0, 1) along +z.
    ``symmetric``: chi_+ = (cos t/2 e^{-i f/2}, sin t/2 e^{i f/2}),
    chi_- = (sin t/2 e^{-i f/2}, -cos t/2 e^{i f/2}); these satisfy Xi chi = chi^*.
    On the z-axis the azimuth f is taken as 0.
    """
    n = np.asarray(n, dtype=float)
    n = n / np.linalg.norm(n, axis=-1, keepdims=True)
    t = np.arccos(np.clip(n[..., 2], -1.0, 1.0))
    on_axis = (n[..., 0] == 0) & (n[..., 1] == 0)
    f = np.where(on_axis, 0.0, np.arctan2(n[..., 1], n[..., 0]))
    c, s = np.cos(t / 2), np.sin(t / 2)
    if convention == "standard":
        plus = np.stack([c + 0j, np.exp(1j * f) * s], axis=-1)
        minus = np.stack([-np.exp(-1j * f) * s, c + 0j], axis=-1)
    elif convention == "symmetric":
        plus = np.stack([c * np.exp(-0.5j * f), s * np.exp(0.5j * f)], axis=-1)
        minus = np.stack([s * np.exp(-0.5j * f), -c * np.exp(0.5j * f)], axis=-1)
    else:
        raise ValueError(f"unknown phase convention {convention!r}")
    return plus, minus


def _check_sigma(sigma: float) -> None:
    if sigma not in SIGMAS:
        raise ValueError(f"sigma must be +1/2 or -1/2, got {sigma!r}")


def _rest_two_spinor(p3, sigma: float, basis: str) -> np.ndarray:
    p3 = np.asarray(p3, dtype=float)
    if basis == "helicity":
        r = np.linalg.norm(p3, axis=-1)
        if np.any(r == 0):
            raise ValueError("helicity basis is undefined at |p| = 0")
        plus, minus = helicity_two_spinors(p3)
        return plus if sigma > 0 else minus
    chi = np.array([1, 0], dtype=complex) if sigma > 0 else np.array([0, 1], dtype=complex)
    return np.broadcast_to(chi, p3.shape[:-1] + (2,))


def spinor_components(kind: str, p3, m, sigma: float, basis: str = "chiral") -> np.ndarray:
    """Batched u or v bispinor components, shape (..., 4)."""
    if kind not in KINDS:
        raise ValueError(f"kind must be 'u' or 'v', got {kind!r}")
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    _check_sigma(sigma)
    m = np.asarray(m, dtype=float)
    if np.any(m <= 0):
        raise ValueError("Dirac spinors need m > 0")
    chi = _rest_two_spinor(p3, sigma, basis) / math.sqrt(2.0)
    right = np.einsum("...ij,...j->...i", _half_boost(p3, m, +1), chi)
    left = np.einsum("...ij,...j->...i", _half_boost(p3, m, -1), chi)
    if kind == "v":
        left = -left  # gamma^5 = diag(1, -1) in the chiral basis
    psi = np.concatenate([right, left], axis=-1)
    if basis == "chiral":
        return psi
    return np.einsum("ij,...j->...i", CHIRAL_TO_STANDARD, psi)


def reference_components(kind: str, p: FourMomentum, sigma: float) -> np.ndarray:
    """Closed-form standard-representation columns (the textbook table)."""
    _check_sigma(sigma)
    e, m = p.E, p.m
    k = math.sqrt((e + m) / (2 * m))
    a = 1.0 / (e + m)
    if sigma > 0:
        top, bottom = [1, 0], [p.pz * a, p.p_r * a]
    else:
        top, bottom = [0, 1], [p.p_l * a, -p.pz * a]
    col = top + bottom if kind == "u" else bottom + top
    return k * np.array(col, dtype=complex)


@dataclass(frozen=True)
class Bispinor:
    """A labelled bispinor evaluated at ``p``.

    The value is ``transform @ spinor(kind, sigma, +-p)``; ``reflect`` records an
    odd number of parity operations (evaluate at -p), which lets ``parity_apply``
    compose.
    """

    kind: str
    sigma: float
    basis: str
    p: FourMomentum
    transform: np.ndarray | None = field(default=None, compare=False)
    reflect: bool = False

    @property
    def components(self) -> np.ndarray:
        q = self.p.reflected() if self.reflect else self.p
        psi = spinor_components(self.kind, q.vec, q.m, self.sigma, self.basis)
        if self.transform is not None:
            psi = self.transform @ psi
        return psi

    def bar(self) -> np.ndarray:
        return self.components.conj() @ gamma(0, self.basis)


def u_spinor(p: FourMomentum, sigma: float, basis: str = "standard") -> Bispinor:
    if p.m <= 0:
        raise ValueError("u_spinor needs m > 0")
    _check_sigma(sigma)
    return Bispinor("u", sigma, basis, p)


def v_spinor(p: FourMomentum, sigma: float, basis: str = "standard") -> Bispinor:
    if p.m <= 0:
        raise ValueError("v_spinor needs m > 0")
    _check_sigma(sigma)
    return Bispinor("v", sigma, basis, p)


def dirac_operator(p: FourMomentum, mass_sign: int = 1, basis: str = "chiral") -> np.ndarray:
    """gamma . p - mass_sign * m; annihilates u for +1 and v for -1."""
    return slash(p.four, basis) - mass_sign * p.m * np.eye(4)


def chiral_matrix_form(p: FourMomentum, mass_sign: int = 1) -> np.ndarray:
    """[[-+m, p0 + sigma.p], [p0 - sigma.p, -+m]] on (phi_R, phi_L)."""
    sp = sigma_dot(p.vec)
    one = np.eye(2)
    mm = -mass_sign * p.m * one
    return np.block([[mm, p.p0 * one + sp], [p.p0 * one - sp, mm]])


def dirac_residual(psi: Bispinor) -> float:
    sign = 1 if psi.kind == "u" else -1
    return float(np.linalg.norm(dirac_operator(psi.p, sign, psi.basis) @ psi.components))


def gram_normalization(p: FourMomentum, basis: str = "standard"):
    """Matrices (ubar_s u_s', vbar_s v_s', ubar_s v_s') over s, s' in (+1/2, -1/2)."""
    us = [u_spinor(p, s, basis) for s in SIGMAS]
    vs = [v_spinor(p, s, basis) for s in SIGMAS]
    g0 = gamma(0, basis)

    def gram(a, b):
        return np.array([[x.components.conj() @ g0 @ y.components for y in b] for x in a])

    return gram(us, us), gram(vs, vs), gram(us, vs)


def batch_gram(kind_a: str, kind_b: str, p3, m, basis: str) -> np.ndarray:
    """Batched 2x2 Dirac-conjugate Gram matrices, shape (..., 2, 2)."""
    g0 = gamma(0, basis)
    a = np.stack([spinor_components(kind_a, p3, m, s, basis) for s in SIGMAS], axis=-2)
    b = np.stack([spinor_components(kind_b, p3, m, s, basis) for s in SIGMAS], axis=-2)
    return np.einsum("...si,ij,...tj->...st", a.conj(), g0, b)


def parity_apply(psi: Bispinor) -> Bispinor:
    """P psi(p) = gamma^0 psi(-p) in the bispinor's own basis."""
    g0 = gamma(0, psi.basis)
    t = g0 if psi.transform is None else g0 @ psi.transform
    return Bispinor(psi.kind, psi.sigma, psi.basis, psi.p, t, not psi.reflect)


def parity_eigenvalue(psi: Bispinor, tol: float | None = None) -> float | None:
    """+1/-1 when P psi = +-psi, otherwise None."""
    tol = default_tol() if tol is None else tol
    a = psi.components
    b = parity_apply(psi).components
    for ev in (1.0, -1.0):
        if np.linalg.norm(b - ev * a) <= tol * max(1.0, np.linalg.norm(a)):
            return ev
    return None


def helicity_matrix(p: FourMomentum) -> np.ndarray:
    sn = sigma_dot(p.n_hat)
    z = np.zeros((2, 2))
    return np.block([[sn, z], [z, sn]])


def helicity_spinors(p: FourMomentum) -> dict[tuple[str, float], Bispinor]:
    """u and v built from sigma.n eigenspinors; keys (kind, sigma) with sigma = h/2."""
    if p.norm == 0:
        raise ValueError("helicity is undefined at |p| = 0")
    if p.m <= 0:
        raise ValueError("helicity_spinors needs m > 0")
    return {(k, s): Bispinor(k, s, "helicity", p) for k in KINDS for s in SIGMAS}


def helicity_change_of_basis(p: FourMomentum) -> np.ndarray:
    """Matrix W with (u_h+, u_h-, v_h+, v_h-) = W^T-combination of the parity-basis set.

    Column j of the returned 4x4 holds the coefficients of helicity spinor j over
    (u_+, u_-, v_+, v_-) of the standard (parity) basis; W is unitary.
    """
    par = np.stack([spinor_components(k, p.vec, p.m, s, "standard") for k in KINDS for s in SIGMAS], axis=1)
    hel = np.stack([spinor_components(k, p.vec, p.m, s, "helicity") for k in KINDS for s in SIGMAS], axis=1)
    return np.linalg.solve(par, hel)


# -- Barut two-mass equation --------------------------------------------------


@dataclass
class BarutSpectrum:
    masses: list[float]
    branches: list[int]
    det_residuals: list[float]
    diagnostic: str = ""


def barut_operator(w: float, alpha: float, beta: float, m: float) -> np.ndarray:
    """Rest-frame momentum-space Barut operator gamma.p + alpha p^2/m - beta at p = (W, 0)."""
    return w * gamma(0, "chiral") + (alpha * w * w / m - beta) * np.eye(4)


def barut_mass_spectrum(alpha: float, beta: float, m: float, samples: int = 10_000,
                        w_max: float | None = None) -> BarutSpectrum:
    """Positive W with Det[gamma.p + alpha p^2/m - beta] = 0 at p^2 = W^2.

    At rest gamma^0 has eigenvalues +-1, so the determinant factorises into the
    two branch polynomials s W + alpha W^2/m - beta.  Each branch is scanned on
    (0, w_max] and sign changes are refined by bisection.
    """
    if m <= 0:
        raise ValueError("reference mass must be positive")
    w_hi = 10.0 * m if w_max is None else w_max
    grid = np.linspace(w_hi / samples, w_hi, samples)
    found: list[tuple[float, int]] = []
    for s in (1, -1):
        f = lambda w, s=s: s * w + alpha * w * w / m - beta  # noqa: E731
        vals = f(grid)
        for i in np.nonzero(vals == 0.0)[0]:
            found.append((float(grid[i]), s))
        idx = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]
        for i in idx:
            lo, hi = float(grid[i]), float(grid[i + 1])
            flo = f(lo)
            for _ in range(200):
                mid = 0.5 * (lo + hi)
                fm = f(mid)
                if fm == 0.0 or hi - lo <= 4e-16 * hi:
                    break
                if (fm < 0) == (flo < 0):
                    lo, flo = mid, fm
                else:
                    hi = mid
            found.append((0.5 * (lo + hi), s))
    found.sort()
    masses = [w for w, _ in found]
    dets = [abs(np.linalg.det(barut_operator(w, alpha, beta, m))) for w in masses]
    diag = "" if masses else f"no positive root in (0, {w_hi:g}]"
    if diag:
        log.warning("barut_mass_spectrum: %s", diag)
    return BarutSpectrum(masses, [s for _, s in found], dets, diag)
