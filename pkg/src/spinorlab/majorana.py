"""Self/anti-self charge-conjugate lambda and rho spinors (chiral basis).

lambda^{S,A} = (+-i Theta phi_L^*, phi_L) and rho^{S,A} = (phi_R, -+i Theta phi_R^*)
with Theta = -i sigma_2 and phi(0) = sqrt(m/2) e_eta, e_up = (1, 0), e_down = (0, 1).
The upper (right-handed) block is boosted with Lambda_R and the lower with
Lambda_L; ``printed_components`` gives the closed-form boosted columns as an
independent construction path.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import FourMomentum, _half_boost, default_tol, gamma, pauli, slash
from .dirac import helicity_two_spinors, spinor_components
from .report import VerificationReport

FAMILIES = ("lambda", "rho")
CLASSES = ("S", "A")
ETAS = ("up", "down")
LABELS = tuple(itertools.product(FAMILIES, CLASSES, ETAS))

THETA = np.array([[0, -1], [1, 0]], dtype=complex)
GAMMA5 = gamma(5, "chiral")
GAMMA0 = gamma(0, "chiral")
C_MATRIX = -gamma(2, "chiral")

# Printed connection matrix: (lS_up, lS_down, lA_up, lA_down) = M (u+, u-, v+, v-).
CONNECTION = 0.5 * np.array(
    [[1, 1j, -1, 1j], [-1j, 1, -1j, -1], [1, -1j, -1, -1j], [1j, 1, 1j, -1]], dtype=complex
)


def _check_label(family: str, conj_class: str, eta: str) -> None:
    if family not in FAMILIES or conj_class not in CLASSES or eta not in ETAS:
        raise ValueError(f"bad Majorana label {(family, conj_class, eta)!r}")


def charge_conjugate(psi, theta: float = 0.0) -> np.ndarray:
    """C psi = -e^{i theta} gamma^2 psi^* (chiral basis); batched over leading axes."""
    psi = np.asarray(psi, dtype=complex)
    return np.exp(1j * theta) * np.einsum("ij,...j->...i", C_MATRIX, psi.conj())


def _rest_phi(eta: str, m, theta1: float = 0.0, theta2: float = 0.0) -> np.ndarray:
    e = np.array([np.exp(1j * theta1), 0]) if eta == "up" else np.array([0, np.exp(1j * theta2)])
    return np.sqrt(np.asarray(m, dtype=float) / 2)[..., None] * e


def build_components(family: str, conj_class: str, eta: str, p3, m, theta1: float = 0.0,
                     theta2: float = 0.0, phi0=None) -> np.ndarray:
    """Batched boost of the rest spinor, shape (..., 4).

    ``phi0`` overrides the rest two-spinor (e.g. helicity eigenspinors); it must
    broadcast to (..., 2) and already carry the sqrt(m/2) normalisation.
    """
    _check_label(family, conj_class, eta)
    p3 = np.asarray(p3, dtype=float)
    m = np.broadcast_to(np.asarray(m, dtype=float), p3.shape[:-1])
    phi = _rest_phi(eta, m, theta1, theta2) if phi0 is None else np.asarray(phi0, dtype=complex)
    sign = 1 if conj_class == "S" else -1
    partner = sign * 1j * np.einsum("ij,...j->...i", THETA, phi.conj())
    lam_r, lam_l = _half_boost(p3, m, +1), _half_boost(p3, m, -1)
    if family == "lambda":
        upper, lower = partner, phi
    else:
        upper, lower = phi, -partner
    upper = np.einsum("...ij,...j->...i", lam_r, upper)
    lower = np.einsum("...ij,...j->...i", lam_l, lower)
    return np.concatenate([upper, lower], axis=-1)


def printed_components(family: str, conj_class: str, eta: str, p: FourMomentum) -> np.ndarray:
    """The closed-form boosted columns, with prefactor 1/(2 sqrt(E + m))."""
    _check_label(family, conj_class, eta)
    m, pr, pl = p.m, p.p_r, p.p_l
    pp, pm = p.p_plus + m, p.p_minus + m
    i = 1j
    table = {
        ("lambda", "S", "up"): [i * pl, i * pm, pm, -pr],
        ("lambda", "S", "down"): [-i * pp, -i * pr, -pl, pp],
        ("lambda", "A", "up"): [-i * pl, -i * pm, pm, -pr],
        ("lambda", "A", "down"): [i * pp, i * pr, -pl, pp],
        ("rho", "S", "up"): [pp, pr, i * pl, -i * pp],
        ("rho", "S", "down"): [pl, pm, i * pm, -i * pr],
        ("rho", "A", "up"): [pp, pr, -i * pl, i * pp],
        ("rho", "A", "down"): [pl, pm, -i * pm, i * pr],
    }
    return np.array(table[(family, conj_class, eta)], dtype=complex) / (2 * math.sqrt(p.E + m))


@dataclass(frozen=True)
class MajoranaSpinor:
    """Labelled lambda/rho spinor; the value is ``transform @ build(label, +-p)``."""

    family: str
    conj_class: str
    eta: str
    p: FourMomentum
    theta1: float = 0.0
    theta2: float = 0.0
    transform: np.ndarray | None = field(default=None, compare=False)
    reflect: bool = False

    def __post_init__(self):
        _check_label(self.family, self.conj_class, self.eta)

    @property
    def label(self) -> tuple[str, str, str]:
        return (self.family, self.conj_class, self.eta)

    @property
    def components(self) -> np.ndarray:
        q = self.p.reflected() if self.reflect else self.p
        psi = build_components(self.family, self.conj_class, self.eta, q.vec, q.m, self.theta1, self.theta2)
        return psi if self.transform is None else self.transform @ psi

    def bar(self) -> np.ndarray:
        return self.components.conj() @ GAMMA0

    def with_transform(self, t: np.ndarray) -> MajoranaSpinor:
        new = t if self.transform is None else t @ self.transform
        return MajoranaSpinor(self.family, self.conj_class, self.eta, self.p, self.theta1, self.theta2,
                              new, self.reflect)


def lambda_spinor(conj_class: str, eta: str, p: FourMomentum, **phases) -> MajoranaSpinor:
    if p.m <= 0:
        raise ValueError("lambda spinors need m > 0 (see massless_limit)")
    return MajoranaSpinor("lambda", conj_class, eta, p, **phases)


def rho_spinor(conj_class: str, eta: str, p: FourMomentum, **phases) -> MajoranaSpinor:
    if p.m <= 0:
        raise ValueError("rho spinors need m > 0 (see massless_limit)")
    return MajoranaSpinor("rho", conj_class, eta, p, **phases)


def lambda_rest(conj_class: str, eta: str, m: float = 1.0) -> MajoranaSpinor:
    return lambda_spinor(conj_class, eta, FourMomentum(m))


def rho_rest(conj_class: str, eta: str, m: float = 1.0) -> MajoranaSpinor:
    return rho_spinor(conj_class, eta, FourMomentum(m))


def spinor(family: str, conj_class: str, eta: str, p: FourMomentum, **phases) -> MajoranaSpinor:
    return (lambda_spinor if family == "lambda" else rho_spinor)(conj_class, eta, p, **phases)


def conjugacy_residual(psi, conj_class: str, theta: float = 0.0) -> float:
    comps = psi.components if isinstance(psi, MajoranaSpinor) else np.asarray(psi)
    sign = 1 if conj_class == "S" else -1
    return float(np.linalg.norm(charge_conjugate(comps, theta) - sign * comps))


# -- parity -------------------------------------------------------------------


def _global_phase(a: np.ndarray, b: np.ndarray, tol: float) -> complex | None:
    """Phase c with a = c b, or None if no single unimodular constant works."""
    k = int(np.argmax(np.abs(b)))
    if abs(b[k]) < tol:
        return None
    c = a[k] / b[k]
    if abs(abs(c) - 1) > tol * 10 or np.linalg.norm(a - c * b) > tol * max(1.0, np.linalg.norm(b)):
        return None
    return complex(c)


def parity_map(psi: MajoranaSpinor, tol: float | None = None):
    """gamma^0 psi(-p) and its identification among the eight species.

    Returns ``(image, label, phase)`` with image = phase x spinor(label).  The
    family expected from the parity count is tried first, since rho and lambda
    of opposite eta are proportional.  ``label`` and ``phase`` are None when nothing matches.
    """
    tol = default_tol() if tol is None else tol
    t = GAMMA0 if psi.transform is None else GAMMA0 @ psi.transform
    image = MajoranaSpinor(psi.family, psi.conj_class, psi.eta, psi.p, psi.theta1, psi.theta2, t, not psi.reflect)
    comps = image.components
    # an odd number of parity operations swaps the family of the base label
    ordered = sorted(LABELS, key=lambda lab: (lab[0] == psi.family) == image.reflect)
    for lab in ordered:
        c = _global_phase(comps, MajoranaSpinor(*lab, psi.p, psi.theta1, psi.theta2).components, tol)
        if c is not None:
            return image, lab, c
    return image, None, None


# -- identities ---------------------------------------------------------------

RHO_LAMBDA = (
    (("rho", "S", "up"), -1j, ("lambda", "A", "down")),
    (("rho", "S", "down"), 1j, ("lambda", "A", "up")),
    (("rho", "A", "up"), 1j, ("lambda", "S", "down")),
    (("rho", "A", "down"), -1j, ("lambda", "S", "up")),
)


def batch_components(label, p3, m, **phases) -> np.ndarray:
    return build_components(*label, p3, m, **phases)


def rho_lambda_relations(p3, m, tol: float | None = None) -> VerificationReport:
    """rho^S_up = -i lambda^A_down and its three partners, batched over momenta."""
    tol = default_tol() if tol is None else tol
    rep = VerificationReport("rho-lambda")
    for lhs, c, rhs in RHO_LAMBDA:
        r = np.linalg.norm(batch_components(lhs, p3, m) - c * batch_components(rhs, p3, m), axis=-1)
        sym = {1j: "+i", -1j: "-i"}[c]
        rep.add(f"{_name(lhs)} = {sym} {_name(rhs)}", "rho = +-i lambda (opposite eta)", float(np.max(r)), tol)
    return rep


def _name(label) -> str:
    fam, cls, eta = label
    return f"{fam}^{cls}_{eta}"


def biorthonormal_grams(p3, m, theta1: float = 0.0, theta2: float = 0.0) -> dict[str, np.ndarray]:
    """Dirac-conjugate products psibar_a psi_b over (S up, S down, A up, A down).

    Returns one (..., 4, 4) table per family.
    """
    out = {}
    order = list(itertools.product(CLASSES, ETAS))
    for fam in FAMILIES:
        cols = np.stack([build_components(fam, c, e, p3, m, theta1, theta2) for c, e in order], axis=-2)
        out[fam] = np.einsum("...ai,ij,...bj->...ab", cols.conj(), GAMMA0, cols)
    return out


def expected_grams(m) -> dict[str, np.ndarray]:
    """The printed +-im pattern (all other products zero)."""
    m = np.asarray(m, dtype=float)
    lam = np.zeros(m.shape + (4, 4), dtype=complex)
    rho = np.zeros_like(lam)
    lam[..., 0, 1], lam[..., 1, 0] = -1j * m, 1j * m
    lam[..., 2, 3], lam[..., 3, 2] = 1j * m, -1j * m
    rho[..., 0, 1], rho[..., 1, 0] = 1j * m, -1j * m
    rho[..., 2, 3], rho[..., 3, 2] = -1j * m, 1j * m
    return {"lambda": lam, "rho": rho}


# -- coupled first-order equations -----------------------------------------

# (operand, coefficient, partner): i gamma.d operand + coefficient * m * partner = 0
COUPLED = (
    (("lambda", "S"), -1, ("rho", "A")),
    (("rho", "A"), -1, ("lambda", "S")),
    (("lambda", "A"), +1, ("rho", "S")),
    (("rho", "S"), +1, ("lambda", "A")),
)
SPECIES = (("lambda", "S"), ("rho", "A"), ("lambda", "A"), ("rho", "S"))


def _slash_batch(p3, m, sign: int) -> np.ndarray:
    p3 = np.asarray(p3, dtype=float)
    e = np.sqrt(np.sum(p3 * p3, axis=-1) + np.asarray(m, dtype=float) ** 2)
    four = np.concatenate([(sign * e)[..., None], sign * p3], axis=-1)
    return np.einsum("...m,mij->...ij", four * np.array([1, -1, -1, -1]),
                     np.stack([gamma(mu, "chiral") for mu in range(4)]))


def coupled_residual_for(signs: dict, p3, m) -> np.ndarray:
    """Residuals of the four coupled equations for plane waves psi(p) e^{-i s p.x}.

    ``signs[species]`` is the frequency sign s (i d_mu -> s p_mu).  Terms with
    different frequencies cannot cancel, so each such term must vanish alone.
    Returns shape (..., 4) over equations and eta maximised.
    """
    m = np.asarray(m, dtype=float)
    out = []
    for (fam, cls), coef, (pfam, pcls) in COUPLED:
        s, sp = signs[(fam, cls)], signs[(pfam, pcls)]
        worst = None
        for eta in ETAS:
            a = np.einsum("...ij,...j->...i", _slash_batch(p3, m, s), build_components(fam, cls, eta, p3, m))
            b = coef * m[..., None] * build_components(pfam, pcls, eta, p3, m)
            if s == sp:
                r = np.linalg.norm(a + b, axis=-1)
            else:
                r = np.maximum(np.linalg.norm(a, axis=-1), np.linalg.norm(b, axis=-1))
            worst = r if worst is None else np.maximum(worst, r)
        out.append(worst)
    return np.stack(out, axis=-1)


def eight_component(signs: dict, p3, m) -> tuple[np.ndarray, np.ndarray]:
    """Residuals of [Gamma.p_eff -+ m] Psi_(+-) with p_eff = s p from the convention.

    Psi_+ = (rho^A, lambda^S), Psi_- = (rho^S, lambda^A), Gamma^mu = offdiag(gamma^mu).
    """
    m = np.asarray(m, dtype=float)
    res = []
    for (first, second), msign in (((("rho", "A"), ("lambda", "S")), -1), ((("rho", "S"), ("lambda", "A")), +1)):
        s = signs[first]
        if signs[second] != s:
            res.append(np.full(np.shape(m), np.inf))
            continue
        sl = _slash_batch(p3, m, s)
        worst = None
        for eta in ETAS:
            top = build_components(*first, eta, p3, m)
            bot = build_components(*second, eta, p3, m)
            r1 = np.einsum("...ij,...j->...i", sl, bot) + msign * m[..., None] * top
            r2 = np.einsum("...ij,...j->...i", sl, top) + msign * m[..., None] * bot
            r = np.sqrt(np.linalg.norm(r1, axis=-1) ** 2 + np.linalg.norm(r2, axis=-1) ** 2)
            worst = r if worst is None else np.maximum(worst, r)
        res.append(worst)
    return res[0], res[1]


def dynamical_residuals(p3, m, tol: float | None = None) -> VerificationReport:
    """Exhaustive search over the 2^4 frequency-sign assignments."""
    tol = default_tol() if tol is None else tol
    rep = VerificationReport("coupled-equations")
    best = None
    for combo in itertools.product((1, -1), repeat=4):
        signs = dict(zip(SPECIES, combo))
        r = coupled_residual_for(signs, p3, m)
        worst = float(np.max(r))
        if best is None or worst < best[0]:
            best = (worst, signs, r)
    worst, signs, r = best
    zeroing = [
        dict(zip(SPECIES, c)) for c in itertools.product((1, -1), repeat=4)
        if float(np.max(coupled_residual_for(dict(zip(SPECIES, c)), p3, m))) <= tol
    ]
    convention = {f"{f}^{c}": ("positive" if s > 0 else "negative") for (f, c), s in signs.items()}
    if worst > tol:
        rep.notes.append("no frequency-sign convention zeroes all four equations")
    names = ("i g.d lambda^S - m rho^A", "i g.d rho^A - m lambda^S",
             "i g.d lambda^A + m rho^S", "i g.d rho^S + m lambda^A")
    for k, name in enumerate(names):
        rep.add(name, "coupled first-order equations", float(np.max(r[..., k])), tol, convention=convention)
    plus, minus = eight_component(signs, p3, m)
    rep.add("[Gamma.p - m] Psi_+ = 0", "8-component form, Psi_+ = (rho^A, lambda^S)", float(np.max(plus)), tol)
    rep.add("[-Gamma.p + m] Psi_- = 0", "8-component form, Psi_- = (rho^S, lambda^A), negative frequency",
            float(np.max(minus)), tol)
    rep.add("unique frequency-sign convention", "frequency-sign search",
            float(len(zeroing) != 1), passed=len(zeroing) == 1,
            conventions=len(zeroing))
    rep.notes.append("frequency convention: " + ", ".join(f"{k} {v}" for k, v in sorted(convention.items())))
    return rep


# -- connection with Dirac spinors ----------------------------------------------


def connection_matrix() -> np.ndarray:
    return CONNECTION.copy()


def connection_check(p3, m, tol: float | None = None) -> tuple[float, complex, np.ndarray]:
    """Residual of (lambda) = c * M (u, v) with c calibrated once at rest.

    Returns (max residual over the batch, calibration constant c, per-sample residuals).
    """
    tol = default_tol() if tol is None else tol
    p3 = np.asarray(p3, dtype=float)
    m = np.broadcast_to(np.asarray(m, dtype=float), p3.shape[:-1])
    order = [("S", "up"), ("S", "down"), ("A", "up"), ("A", "down")]

    def sides(q3, mm):
        lam = np.stack([build_components("lambda", c, e, q3, mm) for c, e in order], axis=-2)
        dirac = np.stack([spinor_components(k, q3, mm, s, "chiral") for k in "uv" for s in (0.5, -0.5)], axis=-2)
        return lam, np.einsum("ab,...bi->...ai", CONNECTION, dirac)

    # rest-frame calibration with unit mass; the m dependence is sqrt(m)
    lam0, rhs0 = sides(np.zeros(3), 1.0)
    c = complex(np.vdot(rhs0.ravel(), lam0.ravel()) / np.vdot(rhs0.ravel(), rhs0.ravel()))
    lam, rhs = sides(p3, m)
    diff = lam - c * np.sqrt(m)[..., None, None] * rhs
    per = np.max(np.abs(diff), axis=(-2, -1))
    return float(np.max(per)), c, per


# -- chiral phase transformations -------------------------------------------------


def chiral_gauge_matrix(family: str, alpha: float) -> np.ndarray:
    s = -1 if family == "lambda" else 1
    return math.cos(alpha) * np.eye(4) + s * 1j * math.sin(alpha) * GAMMA5


def chiral_gauge_transform(psi: MajoranaSpinor, alpha: float) -> MajoranaSpinor:
    """(cos a - i g5 sin a) on lambda, (cos a + i g5 sin a) on rho."""
    return psi.with_transform(chiral_gauge_matrix(psi.family, alpha))


# -- Xi matrix ----------------------------------------------------------------------


def xi_matrix(p: FourMomentum) -> np.ndarray:
    _, phi = p.angles
    return np.diag([np.exp(1j * phi), np.exp(-1j * phi)])


def _block(a, b, c, d) -> np.ndarray:
    return np.block([[a, b], [c, d]])


def xi_property(p: FourMomentum, tol: float | None = None) -> VerificationReport:
    """Xi Lambda Xi^-1 = Lambda^* and the four lambda_S transformations.

    The lambda spinors here are built on the sigma.n eigenspinors in the
    symmetric azimuthal phase convention, the setting in which Xi chi = chi^*.
    """
    tol = default_tol() if tol is None else tol
    rep = VerificationReport("xi")
    xi = xi_matrix(p)
    xinv = np.linalg.inv(xi)
    for rep_name, sign in (("Lambda_R", 1), ("Lambda_L", -1)):
        lam = _half_boost(p.vec, p.m, sign)
        rep.add(f"Xi {rep_name} Xi^-1 = {rep_name}^*", "azimuthal phase conjugation",
                float(np.linalg.norm(xi @ lam @ xinv - lam.conj())), tol)
    z = np.zeros((2, 2))
    plus, minus = helicity_two_spinors(p.n_hat, "symmetric")
    g0 = GAMMA0
    norm = math.sqrt(p.m / 2)
    for eta, chi in (("up", plus), ("down", minus)):
        lam_s = build_components("lambda", "S", eta, p.vec, p.m, phi0=norm * chi)
        lam_a = build_components("lambda", "A", eta, p.vec, p.m, phi0=norm * chi)
        checks = (
            ("lambda_S' = lambda_A^*", _block(xi, z, z, xi) @ lam_s, lam_a.conj()),
            ("lambda_S'' = -i lambda_S^*", _block(1j * xi, z, z, -1j * xi) @ lam_s, -1j * lam_s.conj()),
            ("lambda_S''' = i g0 lambda_A^*", _block(z, 1j * xi, 1j * xi, z) @ lam_s, 1j * g0 @ lam_a.conj()),
            ("lambda_S^IV = g0 lambda_S^*", _block(z, xi, -xi, z) @ lam_s, g0 @ lam_s.conj()),
        )
        for name, lhs, rhs in checks:
            rep.add(f"{name} ({eta})", "Xi-transformed lambda_S", float(np.linalg.norm(lhs - rhs)), tol)
    return rep


# -- massless limit -------------------------------------------------------------------


def massless_sequence(energy: float, n_hat, ks=range(4, 9), theta_convention: str = "standard"):
    """||lambda_up|| / ||lambda_down|| as m = 10^-k E with phi_L(0) on sigma.n eigenspinors.

    Returns dict with mass ratios, the S and A ratios, the down norms and the
    log-log slope of the ratio against m/E.
    """
    n_hat = np.asarray(n_hat, dtype=float)
    n_hat = n_hat / np.linalg.norm(n_hat)
    plus, minus = helicity_two_spinors(n_hat, theta_convention)
    xs, ratios, downs = [], {"S": [], "A": []}, []
    for k in ks:
        m = energy * 10.0 ** (-k)
        p3 = n_hat * math.sqrt(energy**2 - m**2)
        norm = math.sqrt(m / 2)
        xs.append(m / energy)
        for cls in CLASSES:
            up = build_components("lambda", cls, "up", p3, m, phi0=norm * plus)
            down = build_components("lambda", cls, "down", p3, m, phi0=norm * minus)
            ratios[cls].append(float(np.linalg.norm(up) / np.linalg.norm(down)))
            if cls == "S":
                downs.append(float(np.linalg.norm(down)))
    lx = np.log(xs)
    slopes = {cls: float(np.polyfit(lx, np.log(r), 1)[0]) for cls, r in ratios.items()}
    return {"m_over_E": xs, "ratio": ratios, "down_norm": downs, "slope": slopes}


def massless_limit(eta: str = "up", energy: float = 1.0, n_hat=(0.3, -0.5, 0.8),
                   tol: float = 1e-3) -> VerificationReport:
    """Limit m -> 0 of the lambda pair of chiral helicity ``eta``.

    For ``up`` the ratio to the down partner must fall below ``tol`` and its
    log-log slope in m/E is recorded; for ``down`` the norm must stay of order sqrt(E).
    """
    if eta not in ETAS:
        raise ValueError(f"eta must be 'up' or 'down', got {eta!r}")
    seq = massless_sequence(energy, n_hat)
    rep = VerificationReport("massless-limit")
    if eta == "up":
        for cls in CLASSES:
            r = seq["ratio"][cls]
            rep.add(f"||lambda^{cls}_up|| / ||lambda^{cls}_down|| at m/E = {seq['m_over_E'][-1]:.0e}",
                    "massless limit of lambda_up", r[-1], tol)
            rep.add(f"log-log slope of lambda^{cls} ratio in m/E", "scaling of the vanishing pair",
                    abs(seq["slope"][cls] - 1.0), 1e-3, slope=seq["slope"][cls])
        rep.notes.append("the up/down ratio falls like m/(2E), not sqrt(m/E)")
    else:
        down = seq["down_norm"]
        rep.add("lambda_down stays finite (min norm / sqrt(E))", "only the up pair vanishes",
                float(min(down) / math.sqrt(energy)), passed=min(down) > 0.5 * math.sqrt(energy))
    return rep


def species(p: FourMomentum) -> dict[tuple[str, str, str], MajoranaSpinor]:
    return {lab: MajoranaSpinor(*lab, p) for lab in LABELS}


def sigma_n(p: FourMomentum) -> np.ndarray:
    n = p.n_hat
    return sum(n[i] * pauli(i + 1) for i in range(3))


def helicity_matrix(p: FourMomentum) -> np.ndarray:
    sn = sigma_n(p)
    z = np.zeros((2, 2))
    return np.block([[sn, z], [z, sn]])


def dirac_operator(p: FourMomentum) -> np.ndarray:
    return slash(p.four, "chiral")
