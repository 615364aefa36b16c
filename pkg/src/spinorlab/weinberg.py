"""Spin-1 2(2S+1) theory: Pi matrices, the Weinberg-Tucker-Hammer operator,
its dispersion determinant, explicit u/v bivectors and boson parity.

The operator uses Euclidean labels with p_4 = iE, so p_a p_a = p^2 - E^2.
Bivector columns are written in the "standard" representation
((Phi + Xi)/2, (Phi - Xi)/2) with spherical spin matrices (S_3 diagonal),
which is the form of the explicit textbook columns; ``rep="chiral"`` gives
(Phi, Xi) directly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import (
    FourMomentum,
    boost_from_rapidity,
    bmw_gamma,
    default_tol,
    spin_dot,
    vector_boost_velocity,
)
from .polynomial import det_polynomial, multiset_roots

SIGMAS1 = (1, 0, -1)
_R2 = 1.0 / math.sqrt(2.0)
_I3 = np.eye(3, dtype=complex)
CHIRAL_TO_STANDARD6 = _R2 * np.block([[_I3, _I3], [_I3, -_I3]])
GAMMA5_STANDARD = np.block([[np.zeros((3, 3)), _I3], [_I3, np.zeros((3, 3))]])
PARITY_STANDARD = np.block([[_I3, np.zeros((3, 3))], [np.zeros((3, 3)), -_I3]])


@dataclass(frozen=True)
class EuclideanMomentum:
    p1: float
    p2: float
    p3: float
    energy: complex

    @property
    def p4(self) -> complex:
        return 1j * self.energy

    @property
    def components(self) -> np.ndarray:
        return np.array([self.p1, self.p2, self.p3, self.p4], dtype=complex)

    @property
    def square(self) -> complex:
        """p_a p_a = p^2 - E^2 (on shell: -m^2)."""
        return self.p1**2 + self.p2**2 + self.p3**2 - self.energy**2

    @staticmethod
    def from_four(p: FourMomentum) -> EuclideanMomentum:
        return EuclideanMomentum(p.px, p.py, p.pz, p.p0)


# -- Pi matrices ----------------------------------------------------------------


def _spin_rep(s) -> str:
    if s in (0.5, "1/2"):
        return "1/2"
    if s in (1, "1"):
        return "1"
    raise ValueError(f"spin must be 1/2 or 1, got {s!r}")


def pi_matrix(q: FourMomentum, s=1, spin_basis: str = "spherical", sign: int = 1) -> np.ndarray:
    """m^{2s} exp(+-2 Theta q.S) with tanh Theta = |q|/E (sign=-1 gives Pi-bar)."""
    if q.m <= 0:
        raise ValueError("Pi matrices need m > 0")
    spin = _spin_rep(s)
    two_s = 1 if spin == "1/2" else 2
    theta = math.atanh(q.norm / q.E) if q.norm else 0.0
    # the (S,0) boost with rapidity 2 Theta is exp(2 Theta n.S)
    rep = ("(1/2,0)", "(0,1/2)") if spin == "1/2" else ("(1,0)", "(0,1)")
    d = boost_from_rapidity(rep[0] if sign > 0 else rep[1], 2 * theta, q.n_hat, spin_basis)
    return q.m**two_s * d


def pibar_matrix(q: FourMomentum, s=1, spin_basis: str = "spherical") -> np.ndarray:
    return pi_matrix(q, s, spin_basis, sign=-1)


def boost_4vector(q: FourMomentum, rapidity: float, axis) -> FourMomentum:
    axis = np.asarray(axis, dtype=float)
    axis = axis / np.linalg.norm(axis)
    lam = vector_boost_velocity(math.sinh(rapidity) * axis, math.cosh(rapidity))
    out = lam @ q.four
    return FourMomentum(q.m, *out[1:], energy=float(out[0]))


def pi_covariance_residual(q: FourMomentum, rapidity: float, axis, s=1,
                           spin_basis: str = "spherical") -> float:
    """|| D(L) Pi(q) D(L)^dag - Pi(L q) || for a pure boost L with D = exp(rapidity n.S)."""
    spin = _spin_rep(s)
    rep = "(1/2,0)" if spin == "1/2" else "(1,0)"
    d = boost_from_rapidity(rep, rapidity, axis, spin_basis)
    lq = boost_4vector(q, rapidity, axis)
    lq = FourMomentum(q.m, lq.px, lq.py, lq.pz)  # re-derive E on shell
    return float(np.linalg.norm(d @ pi_matrix(q, s, spin_basis) @ d.conj().T - pi_matrix(lq, s, spin_basis)))


# -- bivectors -----------------------------------------------------------------------


def _e_sigma(sigma: int) -> np.ndarray:
    e = np.zeros(3, dtype=complex)
    e[SIGMAS1.index(sigma)] = 1.0
    return e


def printed_u1(p: FourMomentum, sigma: int) -> np.ndarray:
    """Explicit u columns (standard representation, spherical S, p_+- = p_x +- i p_y)."""
    m, e, pz = p.m, p.E, p.pz
    pp, pm = complex(p.px, p.py), complex(p.px, -p.py)
    d = e + m
    if sigma == 1:
        col = [m + (2 * pz**2 + pp * pm) / (2 * d), pz * pp / (math.sqrt(2) * d), pp**2 / (2 * d),
               pz, pp / math.sqrt(2), 0]
    elif sigma == 0:
        col = [pz * pm / (math.sqrt(2) * d), m + pp * pm / d, -pz * pp / (math.sqrt(2) * d),
               pm / math.sqrt(2), 0, pp / math.sqrt(2)]
    elif sigma == -1:
        col = [pm**2 / (2 * d), -pz * pm / (math.sqrt(2) * d), m + (2 * pz**2 + pp * pm) / (2 * d),
               0, pm / math.sqrt(2), -pz]
    else:
        raise ValueError(f"sigma must be +1, 0 or -1, got {sigma!r}")
    return np.array(col, dtype=complex)


def boosted_u1(p: FourMomentum, sigma: int, rep: str = "standard") -> np.ndarray:
    """Phi = exp(+Theta n.S) Phi(0), Xi = exp(-Theta n.S) Xi(0) with Phi(0) = Xi(0) = m e_sigma."""
    if p.m <= 0:
        raise ValueError("spin-1 spinors need m > 0")
    e0 = p.m * _e_sigma(sigma)
    theta = math.atanh(p.norm / p.E) if p.norm else 0.0
    phi = boost_from_rapidity("(1,0)", theta, p.n_hat, "spherical") @ e0
    xi = boost_from_rapidity("(0,1)", theta, p.n_hat, "spherical") @ e0
    chiral = np.concatenate([phi, xi])
    return chiral if rep == "chiral" else to_standard(chiral)


def to_chiral(col: np.ndarray) -> np.ndarray:
    """((Phi+Xi)/2, (Phi-Xi)/2) -> (Phi, Xi)."""
    up, lo = col[:3], col[3:]
    return np.concatenate([up + lo, up - lo])


def to_standard(col: np.ndarray) -> np.ndarray:
    phi, xi = col[:3], col[3:]
    return np.concatenate([(phi + xi) / 2, (phi - xi) / 2])


@dataclass(frozen=True)
class Bivector:
    """Linear combination of u/v spin-1 columns at momentum ``p``.

    ``terms`` holds (coefficient, kind, sigma); components are in the standard
    representation ((Phi+Xi)/2, (Phi-Xi)/2).
    """

    p: FourMomentum
    terms: tuple

    def at(self, q: FourMomentum) -> np.ndarray:
        out = np.zeros(6, dtype=complex)
        for c, kind, sigma in self.terms:
            col = printed_u1(q, sigma)
            out += c * (GAMMA5_STANDARD @ col if kind == "v" else col)
        return out

    @property
    def components(self) -> np.ndarray:
        return self.at(self.p)

    @property
    def chiral(self) -> np.ndarray:
        return to_chiral(self.components)

    def __add__(self, other: Bivector) -> Bivector:
        if self.p != other.p:
            raise ValueError("bivectors must share the momentum")
        return Bivector(self.p, self.terms + other.terms)

    def __rmul__(self, c: complex) -> Bivector:
        return Bivector(self.p, tuple((c * a, k, s) for a, k, s in self.terms))


def u1_spinor(p: FourMomentum, sigma: int) -> Bivector:
    if p.m <= 0:
        raise ValueError("spin-1 spinors need m > 0")
    if sigma not in SIGMAS1:
        raise ValueError(f"sigma must be +1, 0 or -1, got {sigma!r}")
    return Bivector(p, ((1.0, "u", sigma),))


def v1_spinor(p: FourMomentum, sigma: int) -> Bivector:
    """v = gamma_5 u with gamma_5 swapping the upper and lower triples."""
    if p.m <= 0:
        raise ValueError("spin-1 spinors need m > 0")
    if sigma not in SIGMAS1:
        raise ValueError(f"sigma must be +1, 0 or -1, got {sigma!r}")
    return Bivector(p, ((1.0, "v", sigma),))


def coupled_residual(p: FourMomentum, psi: Bivector) -> tuple[np.ndarray, np.ndarray]:
    """Pi-bar(p) Phi - m^2 Xi and Pi(p) Xi - m^2 Phi (spherical basis)."""
    c = psi.chiral
    phi, xi = c[:3], c[3:]
    m2 = p.m**2
    return pibar_matrix(p) @ phi - m2 * xi, pi_matrix(p) @ xi - m2 * phi


# -- the generalized operator ----------------------------------------------------------

_BMW_CACHE: dict = {}


def _bmw(rep: str, spin_basis: str) -> np.ndarray:
    key = (rep, spin_basis)
    if key not in _BMW_CACHE:
        _BMW_CACHE[key] = np.array(
            [[bmw_gamma(a, b, spin_basis, rep) for b in range(1, 5)] for a in range(1, 5)]
        )
    return _BMW_CACHE[key]


def wth_operator(p: EuclideanMomentum, A: float, B: float, m: float, rep: str = "standard",
                 spin_basis: str = "spherical") -> np.ndarray:
    """gamma_ab p_a p_b + A p_a p_a + B m^2 (6x6)."""
    g = _bmw(rep, spin_basis)
    pc = p.components
    return np.einsum("a,b,abij->ij", pc, pc, g) + (A * p.square + B * m * m) * np.eye(6)


def wth_residual(psi_col: np.ndarray, p: FourMomentum, A: float, B: float) -> float:
    op = wth_operator(EuclideanMomentum.from_four(p), A, B, p.m)
    return float(np.linalg.norm(op @ psi_col))


TUCKER_HAMMER = (1.0, 2.0)


def tucker_hammer_coefficients() -> tuple[float, float]:
    """(A, B) of the Tucker-Hammer operator in momentum space.

    The coordinate form gamma_mn d_m d_n + d_m d_m - 2m^2 turns into
    -(gamma_ab p_a p_b + p_a p_a + 2 m^2) under d -> i p, so (A, B) = (1, 2)
    up to the irrelevant overall sign.
    """
    return TUCKER_HAMMER


@dataclass
class RootInfo:
    energy: complex
    multiplicity: int
    kind: str  # "relativistic", "acausal", "other"
    dispersion: float  # |E^2 - p^2 - m^2| / m^2


@dataclass
class DispersionSpectrum:
    A: float
    B: float
    p: tuple
    m: float
    degree: int
    leading: complex
    roots: list
    all_relativistic: bool
    zero_root: bool
    interpolation_check: float

    def energies(self) -> list[complex]:
        return [r.energy for r in self.roots for _ in range(r.multiplicity)]


def dispersion_spectrum(A: float, B: float, pvec, m: float, rep: str = "standard",
                        rel_tol: float = 1e-8) -> DispersionSpectrum:
    """Roots in E of Det[gamma_ab p_a p_b + A p.p + B m^2] from a 13-node interpolation."""
    p3 = np.asarray(pvec, dtype=float)
    scale = math.sqrt(float(p3 @ p3) + m * m)

    def op(e):
        return wth_operator(EuclideanMomentum(*p3, e), A, B, m, rep)

    poly = det_polynomial(op, 12, scale)
    probe = 0.37 * scale
    exact = np.linalg.det(op(probe))
    # relative to the determinant's size on the sampling interval; the probe may sit near a root
    size = max(abs(exact), abs(np.linalg.det(op(poly.half_width))), 1e-300)
    check = abs(poly(probe) - exact) / size
    roots = []
    pp = float(p3 @ p3)
    for r, k in multiset_roots(poly, 1e-3 * scale):
        disp = abs(r * r - pp - m * m) / (m * m)
        if disp <= rel_tol:
            kind = "relativistic"
        elif abs(r) <= 1e-6 * scale:
            kind = "acausal"
        else:
            kind = "other"
        roots.append(RootInfo(complex(r), k, kind, float(disp)))
    zero = any(abs(r.energy) <= 1e-6 * scale for r in roots)
    return DispersionSpectrum(A, B, tuple(p3.tolist()), m, poly.degree(), poly.leading(), roots,
                              all(r.kind == "relativistic" for r in roots) and bool(roots), zero, float(check))


def factorized_determinant(A: float, B: float, pvec, m: float, energy: complex) -> complex:
    """[(B m^2 - (A+1) x)(B m^2 - (A-1) x)]^3 with x = E^2 - p^2."""
    p3 = np.asarray(pvec, dtype=float)
    x = energy * energy - float(p3 @ p3)
    return ((B * m * m - (A + 1) * x) * (B * m * m - (A - 1) * x)) ** 3


def extra_branch(A: float, B: float, m: float) -> complex | None:
    """The non-relativistic E^2 - p^2 of the second factor, or None if absent."""
    roots = []
    for a in (A + 1, A - 1):
        if a != 0:
            roots.append(B * m * m / a)
    extras = [x for x in roots if abs(x - m * m) > 1e-12 * max(1.0, m * m)]
    return extras[0] if extras else None


# -- parity ---------------------------------------------------------------------------


def boson_parity(psi: Bivector, tol: float | None = None):
    """Eigenvalue of psi(p) -> diag(1, -1) psi(-p) (standard form); None if not an eigenstate."""
    tol = default_tol() if tol is None else tol
    a = psi.components
    b = PARITY_STANDARD @ psi.at(psi.p.reflected())
    scale = max(1.0, float(np.linalg.norm(a)))
    for ev in (1, -1):
        if np.linalg.norm(b - ev * a) <= tol * scale:
            return ev
    return None


def spin1_dot(n) -> np.ndarray:
    return spin_dot(n, "1", "spherical")
