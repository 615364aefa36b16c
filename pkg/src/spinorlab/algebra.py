"""Matrix tables, four-momentum kinematics and Wigner boosts.

Conventions
-----------
* Metric diag(+, -, -, -) and natural units for the spin-1/2 sector.
* Chiral (Weyl) gamma matrices with the two-spinor ordering (phi_R, phi_L),
  gamma^0 = [[0, 1], [1, 0]], gamma^i = [[0, -sigma_i], [sigma_i, 0]], so that
  gamma . p = [[0, p0 + sigma.p], [p0 - sigma.p, 0]].
* Standard (Dirac) matrices are U gamma_chiral U^dagger with
  U = [[1, 1], [1, -1]] / sqrt(2).
* Spin-1 matrices come in a Cartesian basis, (S_i)_{jk} = -i eps_{ijk}, and a
  spherical basis with S_z = diag(1, 0, -1) (Condon-Shortley phases).

Matrices are plain ``numpy`` complex arrays; ``residual`` and ``close`` are the
tolerance-based comparisons used throughout the package.
"""
from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass

import numpy as np

DEFAULT_TOL = 1e-10
TABLE_TOL = 1e-12
TOL_ENV = "SPINORLAB_TOL"

BASES = ("chiral", "standard", "helicity")
SPIN_BASES = ("cartesian", "spherical")
HALF_REPS = ("(1/2,0)", "(0,1/2)")
ONE_REPS = ("(1,0)", "(0,1)")

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])


def default_tol() -> float:
    """Identity tolerance, overridable through ``SPINORLAB_TOL``."""
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return DEFAULT_TOL
    tol = float(raw)
    if not tol > 0:
        raise ValueError(f"{TOL_ENV} must be positive, got {raw!r}")
    return tol


def residual(a, b=None) -> float:
    """Frobenius norm of ``a - b`` (or of ``a``), maximised over a batch axis."""
    d = np.asarray(a, dtype=complex)
    if b is not None:
        d = d - np.asarray(b, dtype=complex)
    if d.ndim <= 2:
        return float(np.linalg.norm(d))
    flat = d.reshape(d.shape[0], -1)
    return float(np.max(np.linalg.norm(flat, axis=1)))


def close(a, b, tol: float | None = None) -> bool:
    return residual(a, b) <= (default_tol() if tol is None else tol)


# -- fixed tables -------------------------------------------------------------

_I2 = np.eye(2, dtype=complex)
_SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def pauli(i: int) -> np.ndarray:
    if i not in (1, 2, 3):
        raise ValueError(f"Pauli axis must be 1, 2 or 3, got {i!r}")
    return _SIGMA[i - 1].copy()


def sigma_dot(n) -> np.ndarray:
    """sigma . n for a 3-vector, or a batch of them with shape (..., 3)."""
    n = np.asarray(n)
    return np.einsum("...i,ijk->...jk", n, np.stack(_SIGMA))


def _levi_civita() -> np.ndarray:
    eps = np.zeros((3, 3, 3))
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        eps[i, j, k] = 1.0
        eps[i, k, j] = -1.0
    return eps


LEVI_CIVITA = _levi_civita()

_S1_CART = tuple(-1j * LEVI_CIVITA[i] for i in range(3))
_R2 = 1.0 / math.sqrt(2.0)
_S1_SPH = (
    _R2 * np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex),
    _R2 * np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=complex),
    np.diag([1.0, 0.0, -1.0]).astype(complex),
)

# columns: e_{+1}, e_0, e_{-1} in Cartesian components
SPHERICAL_TO_CARTESIAN = np.array(
    [[-_R2, 0, _R2], [-1j * _R2, 0, -1j * _R2], [0, 1, 0]], dtype=complex
)


def spin1_matrices(basis: str = "cartesian") -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    if basis == "cartesian":
        return tuple(s.copy() for s in _S1_CART)
    if basis == "spherical":
        return tuple(s.copy() for s in _S1_SPH)
    raise ValueError(f"unknown spin basis {basis!r}")


def spin_dot(n, spin: str = "1/2", basis: str = "cartesian") -> np.ndarray:
    """S . n for spin 1/2 (sigma/2) or spin 1, batched over leading axes of n."""
    n = np.asarray(n)
    if spin == "1/2":
        return 0.5 * sigma_dot(n)
    if spin == "1":
        return np.einsum("...i,ijk->...jk", n, np.stack(spin1_matrices(basis)))
    raise ValueError(f"unsupported spin {spin!r}")


def _block(a, b, c, d) -> np.ndarray:
    return np.block([[a, b], [c, d]])


def _build_gammas() -> dict[str, tuple[np.ndarray, ...]]:
    z2 = np.zeros((2, 2), dtype=complex)
    chiral = [_block(z2, _I2, _I2, z2)]
    chiral += [_block(z2, -s, s, z2) for s in _SIGMA]
    standard = [_block(_I2, z2, z2, -_I2)]
    standard += [_block(z2, s, -s, z2) for s in _SIGMA]
    out = {}
    for name, g in (("chiral", chiral), ("standard", standard)):
        g5 = 1j * g[0] @ g[1] @ g[2] @ g[3]
        out[name] = tuple(g) + (g5,)
    return out


_GAMMAS = _build_gammas()

CHIRAL_TO_STANDARD = _R2 * np.block([[_I2, _I2], [_I2, -_I2]])


def _gamma_table(basis: str) -> tuple[np.ndarray, ...]:
    if basis == "helicity":
        # helicity-basis spinors live in the standard representation
        basis = "standard"
    try:
        return _GAMMAS[basis]
    except KeyError:
        raise ValueError(f"unknown basis {basis!r}") from None


def gamma(mu: int, basis: str = "chiral") -> np.ndarray:
    """gamma^mu for mu in 0..3, or gamma^5 for mu == 5."""
    table = _gamma_table(basis)
    if mu in (0, 1, 2, 3):
        return table[mu].copy()
    if mu == 5:
        return table[4].copy()
    raise ValueError(f"gamma index must be 0..3 or 5, got {mu!r}")


def slash(p4, basis: str = "chiral") -> np.ndarray:
    """gamma . p = gamma^0 p^0 - gamma^i p^i for contravariant p4 (..., 4)."""
    p4 = np.asarray(p4)
    g = np.stack(_gamma_table(basis)[:4])
    cov = p4 * np.array([1.0, -1.0, -1.0, -1.0])
    return np.einsum("...m,mjk->...jk", cov, g)


def bmw_gamma(mu: int, nu: int, spin_basis: str = "cartesian", rep: str = "chiral") -> np.ndarray:
    """6x6 Barut-Muzinich-Williams matrices for spin 1 (Euclidean labels, 4 is time).

    ``rep="chiral"`` gives the block form with gamma_44 off-diagonal;
    ``rep="standard"`` conjugates with the 6x6 analogue of CHIRAL_TO_STANDARD.
    """
    if mu not in (1, 2, 3, 4) or nu not in (1, 2, 3, 4):
        raise ValueError(f"BMW indices must be in 1..4, got ({mu!r}, {nu!r})")
    s = spin1_matrices(spin_basis)
    i3 = np.eye(3, dtype=complex)
    z3 = np.zeros((3, 3), dtype=complex)
    if mu == 4 and nu == 4:
        g = _block(z3, i3, i3, z3)
    elif mu == 4 or nu == 4:
        k = (nu if mu == 4 else mu) - 1
        g = _block(z3, 1j * s[k], -1j * s[k], z3)
    else:
        i, j = mu - 1, nu - 1
        off = (i == j) * i3 - s[i] @ s[j] - s[j] @ s[i]
        g = _block(z3, off, off, z3)
    if rep == "chiral":
        return g
    if rep == "standard":
        u = _R2 * np.block([[i3, i3], [i3, -i3]])
        return u @ g @ u.conj().T
    raise ValueError(f"unknown representation {rep!r}")


def tables_json() -> str:
    """All fixed matrix tables as JSON (complex entries as [re, im])."""

    def enc(m):
        return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m)]

    data = {
        "pauli": {str(i): enc(pauli(i)) for i in (1, 2, 3)},
        "spin1": {b: [enc(s) for s in spin1_matrices(b)] for b in SPIN_BASES},
        "gamma": {
            b: {str(mu): enc(gamma(mu, b)) for mu in (0, 1, 2, 3, 5)}
            for b in ("chiral", "standard")
        },
        "bmw": {f"{m}{n}": enc(bmw_gamma(m, n)) for m in range(1, 5) for n in range(1, 5)},
    }
    return json.dumps(data, sort_keys=True)


# -- kinematics ---------------------------------------------------------------


@dataclass(frozen=True)
class FourMomentum:
    """Four-momentum of a particle of mass ``m``.

    ``energy`` overrides the on-shell value sqrt(p^2 + m^2) for off-shell use;
    ``energy_sign`` selects the p0 = +E or p0 = -E branch.
    """

    m: float
    px: float = 0.0
    py: float = 0.0
    pz: float = 0.0
    energy_sign: int = 1
    energy: float | None = None

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("mass must be non-negative")
        if self.energy_sign not in (1, -1):
            raise ValueError("energy_sign must be +1 or -1")
        if self.energy is not None and self.energy < 0:
            raise ValueError("energy magnitude must be non-negative")

    @property
    def vec(self) -> np.ndarray:
        return np.array([self.px, self.py, self.pz], dtype=float)

    @property
    def norm(self) -> float:
        return math.sqrt(self.px**2 + self.py**2 + self.pz**2)

    @property
    def E(self) -> float:
        if self.energy is not None:
            return float(self.energy)
        return math.sqrt(self.px**2 + self.py**2 + self.pz**2 + self.m**2)

    @property
    def p0(self) -> float:
        return self.energy_sign * self.E

    @property
    def four(self) -> np.ndarray:
        return np.array([self.p0, self.px, self.py, self.pz])

    @property
    def p_plus(self) -> float:
        return self.E + self.pz

    @property
    def p_minus(self) -> float:
        return self.E - self.pz

    @property
    def p_r(self) -> complex:
        return complex(self.px, self.py)

    @property
    def p_l(self) -> complex:
        return complex(self.px, -self.py)

    @property
    def n_hat(self) -> np.ndarray:
        """Unit vector along p; (0, 0, 1) at rest."""
        r = self.norm
        if r == 0.0:
            return np.array([0.0, 0.0, 1.0])
        return self.vec / r

    @property
    def angles(self) -> tuple[float, float]:
        """Polar and azimuthal angle of p (azimuth 0 on the z-axis)."""
        n = self.n_hat
        theta = math.acos(max(-1.0, min(1.0, n[2])))
        phi = math.atan2(n[1], n[0]) if (self.px or self.py) else 0.0
        return theta, phi

    def invariant_mass2(self) -> float:
        return self.p0**2 - self.norm**2

    def reflected(self) -> FourMomentum:
        """Spatial reflection p -> -p at the same energy."""
        return FourMomentum(self.m, -self.px, -self.py, -self.pz, self.energy_sign, self.energy)

    def negated(self) -> FourMomentum:
        """Full four-vector reflection (p0, p) -> (-p0, -p)."""
        return FourMomentum(self.m, -self.px, -self.py, -self.pz, -self.energy_sign, self.energy)

    @classmethod
    def from_vec(cls, m: float, vec, energy_sign: int = 1) -> FourMomentum:
        x, y, z = (float(c) for c in vec)
        return cls(float(m), x, y, z, energy_sign)


def random_momenta(rng: np.random.Generator, n: int, m_range=(0.1, 10.0), max_ratio: float = 10.0):
    """Seeded on-shell momenta: m uniform in m_range, |p| uniform in [0, max_ratio m],
    direction uniform on the sphere. Returns (p3 with shape (n, 3), m with shape (n,))."""
    m = rng.uniform(*m_range, size=n)
    r = rng.uniform(0.0, max_ratio, size=n) * m
    d = rng.normal(size=(n, 3))
    d /= np.linalg.norm(d, axis=1, keepdims=True)
    return d * r[:, None], m


def energies(p3, m) -> np.ndarray:
    p3 = np.asarray(p3, dtype=float)
    return np.sqrt(np.sum(p3**2, axis=-1) + np.asarray(m, dtype=float) ** 2)


# -- boosts -------------------------------------------------------------------


@dataclass(frozen=True)
class BoostParams:
    rapidity: float
    axis: tuple[float, float, float]

    @property
    def gamma(self) -> float:
        return math.cosh(self.rapidity)

    @property
    def beta(self) -> float:
        return math.tanh(self.rapidity)


def boost_params(p: FourMomentum) -> BoostParams:
    if p.m <= 0:
        raise ValueError("boost from rest needs m > 0 (rapidity diverges for m = 0)")
    return BoostParams(math.asinh(p.norm / p.m), tuple(p.n_hat))


def _half_boost(p3, m, sign: int) -> np.ndarray:
    """exp(sign * sigma.phi / 2), batched; cosh/sinh of the half rapidity in closed form."""
    p3 = np.asarray(p3, dtype=float)
    m = np.asarray(m, dtype=float)
    e = energies(p3, m)
    ch = np.sqrt((e + m) / (2 * m))
    # sinh(phi/2) n = p / sqrt(2 m (E + m))
    sh_n = p3 / np.sqrt(2 * m * (e + m))[..., None]
    return ch[..., None, None] * _I2 + sign * sigma_dot(sh_n)


def _one_boost(p3, m, sign: int, spin_basis: str) -> np.ndarray:
    """exp(sign * S.phi) = 1 + sinh(phi) S.n + (cosh(phi) - 1)(S.n)^2, batched."""
    p3 = np.asarray(p3, dtype=float)
    m = np.asarray(m, dtype=float)
    e = energies(p3, m)
    sp = spin_dot(p3, "1", spin_basis)  # S.p = |p| S.n
    # sinh(phi) S.n = S.p / m ; (cosh(phi) - 1)(S.n)^2 = (S.p)^2 / (m (E + m))
    return (
        np.eye(3, dtype=complex)
        + sign * sp / m[..., None, None]
        + (sp @ sp) / (m * (e + m))[..., None, None]
    )


def boost_matrix(rep: str, p: FourMomentum, spin_basis: str = "cartesian") -> np.ndarray:
    """Wigner boost from rest to p: exp(+S.phi) on (S,0), exp(-S.phi) on (0,S)."""
    if p.m <= 0:
        raise ValueError("boost_matrix needs m > 0 (rapidity diverges for m = 0)")
    if rep in HALF_REPS:
        return _half_boost(p.vec, p.m, 1 if rep == "(1/2,0)" else -1)
    if rep in ONE_REPS:
        return _one_boost(p.vec, p.m, 1 if rep == "(1,0)" else -1, spin_basis)
    raise ValueError(f"unknown representation {rep!r}")


def boost_from_rapidity(rep: str, rapidity: float, axis, spin_basis: str = "cartesian") -> np.ndarray:
    """exp(+-S.n rapidity) straight from the rapidity (no momentum needed)."""
    n = np.asarray(axis, dtype=float)
    n = n / np.linalg.norm(n)
    if rep in HALF_REPS:
        sign = 1 if rep == "(1/2,0)" else -1
        return math.cosh(rapidity / 2) * _I2 + sign * math.sinh(rapidity / 2) * sigma_dot(n)
    if rep in ONE_REPS:
        sign = 1 if rep == "(1,0)" else -1
        sn = spin_dot(n, "1", spin_basis)
        return np.eye(3) + sign * math.sinh(rapidity) * sn + (math.cosh(rapidity) - 1) * sn @ sn
    raise ValueError(f"unknown representation {rep!r}")


def vector_boost(p: FourMomentum) -> np.ndarray:
    """4x4 Lorentz boost (contravariant) taking (m, 0) to (E, p)."""
    return vector_boost_velocity(p.vec / p.m, p.E / p.m)


def vector_boost_velocity(u3, gamma_factor: float) -> np.ndarray:
    """Pure boost with spatial 4-velocity u3 = gamma * beta."""
    u3 = np.asarray(u3, dtype=float)
    lam = np.eye(4)
    lam[0, 0] = gamma_factor
    lam[0, 1:] = u3
    lam[1:, 0] = u3
    lam[1:, 1:] += np.outer(u3, u3) / (1.0 + gamma_factor)
    return lam
