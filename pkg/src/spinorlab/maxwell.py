"""Maxwell-like equations with a gradient field chi, Riemann-Silberstein evolution
and the root structure of Det[E -+ S.p].

Plane waves F(x, t) = F0 exp(i(k.x - w t)) turn the system into algebra:
grad -> i k and d/dt -> -i w.  chi enters through the real and imaginary parts
of its amplitude, so the residual map is real-linear in the field triple.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import FourMomentum, gamma, sigma_dot, slash, spin_dot
from .polynomial import det_polynomial, multiset_roots


@dataclass(frozen=True)
class FieldTriple:
    E: np.ndarray
    B: np.ndarray
    chi: complex
    k: np.ndarray
    omega: float

    @staticmethod
    def make(E, B, chi, k, omega) -> FieldTriple:
        return FieldTriple(np.asarray(E, dtype=complex), np.asarray(B, dtype=complex), complex(chi),
                           np.asarray(k, dtype=float), float(omega))

    def scaled(self, c: float) -> FieldTriple:
        return FieldTriple(c * self.E, c * self.B, c * self.chi, self.k, self.omega)

    def __add__(self, other: FieldTriple) -> FieldTriple:
        if not (np.array_equal(self.k, other.k) and self.omega == other.omega):
            raise ValueError("plane waves must share k and omega")
        return FieldTriple(self.E + other.E, self.B + other.B, self.chi + other.chi, self.k, self.omega)


@dataclass(frozen=True)
class MaxwellResidual:
    curl_e: np.ndarray
    curl_b: np.ndarray
    div_e: complex
    div_b: complex

    def norm(self) -> float:
        parts = np.concatenate([self.curl_e, self.curl_b, [self.div_e, self.div_b]])
        return float(np.linalg.norm(parts))

    def as_array(self) -> np.ndarray:
        return np.concatenate([self.curl_e, self.curl_b, [self.div_e, self.div_b]])


def maxwell_residual(f: FieldTriple) -> MaxwellResidual:
    """Residuals of
    curl E = -dB/dt + grad Im chi,   curl B = dE/dt + grad Re chi,
    div E = -d(Re chi)/dt,           div B = d(Im chi)/dt.
    """
    ik = 1j * f.k
    iw = 1j * f.omega
    re, im = f.chi.real, f.chi.imag
    return MaxwellResidual(
        curl_e=np.cross(ik, f.E) - iw * f.B - ik * im,
        curl_b=np.cross(ik, f.B) + iw * f.E - ik * re,
        div_e=complex(ik @ f.E - iw * re),
        div_b=complex(ik @ f.B + iw * im),
    )


@dataclass(frozen=True)
class RSVector:
    phi: np.ndarray
    xi: np.ndarray

    @staticmethod
    def from_fields(E, B) -> RSVector:
        E, B = np.asarray(E, dtype=complex), np.asarray(B, dtype=complex)
        return RSVector(E + 1j * B, E - 1j * B)

    @property
    def E(self) -> np.ndarray:
        return (self.phi + self.xi) / 2

    @property
    def B(self) -> np.ndarray:
        return (self.phi - self.xi) / 2j


def rs_evolution_matrices(k) -> tuple[np.ndarray, np.ndarray]:
    """Generators of i d(phi)/dt = (S.k) phi and i d(xi)/dt = -(S.k) xi."""
    sk = spin_dot(np.asarray(k, dtype=float), "1")
    return sk, -sk


def rs_residual(rs: RSVector, k, omega: float) -> tuple[np.ndarray, np.ndarray]:
    """Plane-wave residuals w phi - (S.k) phi and w xi + (S.k) xi."""
    gp, gx = rs_evolution_matrices(k)
    return omega * rs.phi - gp @ rs.phi, omega * rs.xi - gx @ rs.xi


def rs_characteristic(k, sign: int = 1, samples: int = 5):
    """Det[E - sign (S.k)] interpolated from ``samples`` energies (degree <= samples - 1)."""
    sk = spin_dot(np.asarray(k, dtype=float), "1")
    scale = max(float(np.linalg.norm(k)), 1.0)
    return det_polynomial(lambda e: e * np.eye(3) - sign * sk, samples - 1, scale)


def rs_roots(k, sign: int = 1) -> list[float]:
    """Roots of Det[E - sign S.k] in E, i.e. the eigenvalues of sign (S.k)."""
    sk = spin_dot(np.asarray(k, dtype=float), "1")
    return sorted(float(v) for v in np.linalg.eigvalsh(sign * sk))


def longitudinal_mode(k) -> np.ndarray:
    """Unit null vector of S.k (the E = 0 mode); proportional to k."""
    sk = spin_dot(np.asarray(k, dtype=float), "1")
    _, s, vh = np.linalg.svd(sk)
    v = vh[-1].conj()
    return v / np.linalg.norm(v)


def spin1_square_residual(p) -> np.ndarray:
    """(S.p)^2 - (p^2 I - p p^T); exact for integer p."""
    p = np.asarray(p, dtype=float)
    sp = spin_dot(p, "1")
    return sp @ sp - ((p @ p) * np.eye(3) - np.outer(p, p))


def kg_factorization_spin1(p: FourMomentum, psi) -> np.ndarray:
    """(E - S.p)(E + S.p) psi - p (p.psi) - m^2 psi.

    Equals (E^2 - p^2 - m^2) psi identically; ``p.energy`` may be set off-shell.
    """
    psi = np.asarray(psi, dtype=complex)
    e = p.p0
    sp = spin_dot(p.vec, "1")
    one = np.eye(3)
    return (e * one - sp) @ (e * one + sp) @ psi - p.vec * (p.vec @ psi) - p.m**2 * psi


def kg_factorization_spin_half(p: FourMomentum, psi) -> np.ndarray:
    """(E - sigma.p)(E + sigma.p) psi - m^2 psi."""
    psi = np.asarray(psi, dtype=complex)
    sp = sigma_dot(p.vec)
    one = np.eye(2)
    return (p.p0 * one - sp) @ (p.p0 * one + sp) @ psi - p.m**2 * psi


@dataclass(frozen=True)
class ChiralDispersion:
    roots: list[tuple[complex, int]]
    mass2: list[complex]
    det_degree: int


def chiral_mass_operator(e: float, p3, m1: float, m2: float) -> np.ndarray:
    p4 = np.concatenate([[e], np.asarray(p3, dtype=float)])
    return slash(p4, "chiral") + m1 * np.eye(4) + m2 * gamma(5, "chiral")


def chiral_mass_dispersion(m1: float, m2: float, p3) -> ChiralDispersion:
    """Roots in E of Det[gamma.p + m1 + m2 gamma^5] at fixed 3-momentum.

    The effective mass^2 of each root is E^2 - p^2; multiplicities come from
    clustering the roots of the interpolated quartic.
    """
    p3 = np.asarray(p3, dtype=float)
    pp = float(p3 @ p3)
    scale = max(np.sqrt(pp + m1 * m1 + m2 * m2), 1e-3)
    poly = det_polynomial(lambda e: chiral_mass_operator(e, p3, m1, m2), 4, scale)
    roots = multiset_roots(poly, 1e-5 * scale)
    return ChiralDispersion(roots, [r * r - pp for r, _ in roots], poly.degree())
