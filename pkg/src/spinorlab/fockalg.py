"""Finite symbolic algebra of one-particle Fock states and discrete symmetry maps.

Generators are a_eta(p), b_eta(p) and their adjoints with momentum labels such
as ``"p"`` and ``"-p"``.  A map is specified on half of the generators (the
printed rules) and completed by taking adjoints: if U g U^-1 = c h then
U g^dagger U^-1 = c^* h^dagger, for unitary and antiunitary U alike.  One-particle
kets are |p, eta>^+ = a^dagger_eta(p)|0> and |p, eta>^- = b^dagger_eta(p)|0>;
the vacuum is invariant under every map.

All phases are small Gaussian integers, so complex equality here is exact.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .report import VerificationReport

ETAS = ("up", "down")
SPECIES = ("a", "b")
VACUUM = None


def neg_label(label: str) -> str:
    return label[1:] if label.startswith("-") else "-" + label


def flip_eta(eta: str) -> str:
    return "down" if eta == "up" else "up"


@dataclass(frozen=True, order=True)
class Generator:
    species: str
    dagger: bool
    eta: str
    mom: str = "p"

    def __post_init__(self):
        if self.species not in SPECIES or self.eta not in ETAS:
            raise ValueError(f"bad generator {self!r}")

    def adjoint(self) -> Generator:
        return Generator(self.species, not self.dagger, self.eta, self.mom)

    def __str__(self) -> str:
        return f"{self.species}{'^dag' if self.dagger else ''}_{self.eta}({self.mom})"


@dataclass(frozen=True, order=True)
class Ket:
    """|mom, eta>^charge with charge '+' (a-type) or '-' (b-type)."""

    charge: str
    eta: str
    mom: str = "p"

    def creator(self) -> Generator:
        return Generator("a" if self.charge == "+" else "b", True, self.eta, self.mom)

    @staticmethod
    def from_creator(g: Generator) -> Ket:
        if not g.dagger:
            raise ValueError(f"{g} does not create a one-particle state")
        return Ket("+" if g.species == "a" else "-", g.eta, g.mom)

    def __str__(self) -> str:
        return f"|{self.mom},{self.eta}>^{self.charge}"


@dataclass(frozen=True)
class FockStateVector:
    """Finite complex combination of kets (``None`` is the vacuum)."""

    terms: tuple = ()

    @staticmethod
    def of(mapping: dict) -> FockStateVector:
        items = [(k, complex(c)) for k, c in mapping.items() if c != 0]
        items.sort(key=lambda kc: (kc[0] is not None, kc[0] or Ket("", "")))
        return FockStateVector(tuple(items))

    @staticmethod
    def ket(charge: str, eta: str, mom: str = "p", coef: complex = 1) -> FockStateVector:
        return FockStateVector.of({Ket(charge, eta, mom): coef})

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __add__(self, other: FockStateVector) -> FockStateVector:
        d = self.as_dict()
        for k, c in other.terms:
            d[k] = d.get(k, 0) + c
        return FockStateVector.of(d)

    def __rmul__(self, c: complex) -> FockStateVector:
        return FockStateVector.of({k: c * v for k, v in self.terms})

    def __neg__(self) -> FockStateVector:
        return -1 * self

    def __sub__(self, other: FockStateVector) -> FockStateVector:
        return self + (-other)

    def relabel(self, fn) -> FockStateVector:
        return FockStateVector.of({(k if k is None else Ket(k.charge, k.eta, fn(k.mom))): c for k, c in self.terms})

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({_fmt(c)}){'|0>' if k is None else k}" for k, c in self.terms)


def _fmt(c: complex) -> str:
    re, im = c.real, c.imag
    if im == 0:
        return f"{re:g}"
    if re == 0:
        return f"{im:g}i"
    return f"{re:g}{im:+g}i"


# A rule maps (species, dagger, eta) -> (phase, species', dagger', eta', reverses momentum)
Rule = tuple[complex, str, bool, str, bool]


@dataclass(frozen=True)
class SymmetryMap:
    name: str
    antiunitary: bool
    rules: dict = field(hash=False, compare=False)
    notes: tuple = ()

    def act(self, g: Generator) -> tuple[complex, Generator]:
        key = (g.species, g.dagger, g.eta)
        if key not in self.rules:
            raise KeyError(f"{self.name} is undefined on {g}")
        c, sp, dg, eta, flip = self.rules[key]
        return c, Generator(sp, dg, eta, neg_label(g.mom) if flip else g.mom)

    def inverse(self) -> SymmetryMap:
        """U^-1 with U^-1 h U = c' g whenever U g U^-1 = c h."""
        inv = {}
        for (sp, dg, eta), (c, sp2, dg2, eta2, flip) in self.rules.items():
            # U g U^-1 = c h  =>  g = U^-1 (c h) U = c^(*) U^-1 h U
            cc = c.conjugate() if self.antiunitary else c
            inv[(sp2, dg2, eta2)] = (1 / cc, sp, dg, eta, flip)
        return SymmetryMap(f"({self.name})^-1", self.antiunitary, inv)


def make_map(name: str, antiunitary: bool, printed: dict, notes: tuple = ()) -> SymmetryMap:
    """Complete a rule table given on half the generators by taking adjoints."""
    rules = dict(printed)
    for (sp, dg, eta), (c, sp2, dg2, eta2, flip) in printed.items():
        key = (sp, not dg, eta)
        if key not in rules:
            rules[key] = (complex(c).conjugate(), sp2, not dg2, eta2, flip)
    keys = {(s, d, e) for s in SPECIES for d in (False, True) for e in ETAS}
    if set(rules) != keys:
        raise ValueError(f"{name}: rule table does not cover every generator")
    images = {(r[1], r[2], r[3]) for r in rules.values()}
    if images != keys:
        raise ValueError(f"{name}: rule table is not a bijection")
    return SymmetryMap(name, antiunitary, {k: (complex(v[0]),) + tuple(v[1:]) for k, v in rules.items()}, notes)


U_S = make_map("U^s", False, {
    ("a", False, "up"): (-1j, "a", False, "down", True),
    ("a", False, "down"): (1j, "a", False, "up", True),
    ("b", True, "up"): (1j, "b", True, "down", True),
    ("b", True, "down"): (-1j, "b", True, "up", True),
}, ("U^s b^dag_down(p) U^s^-1 = -i b^dag_up(-p): daggered so the map is a bijection",))

U_C = make_map("U^c", False, {
    ("a", False, "up"): (1, "b", False, "up", False),
    ("a", False, "down"): (1, "b", False, "down", False),
    ("b", True, "up"): (-1, "a", True, "up", False),
    ("b", True, "down"): (-1, "a", True, "down", False),
})

V_C = make_map("V^c", False, {
    ("a", False, "up"): (-1, "b", False, "down", False),
    ("a", False, "down"): (-1, "b", False, "up", False),
    ("b", True, "up"): (1, "a", True, "down", False),
    ("b", True, "down"): (1, "a", True, "up", False),
})

V_T = make_map("V^T", True, {
    ("a", True, "up"): (1, "a", True, "down", True),
    ("a", True, "down"): (-1, "a", True, "up", True),
    ("b", False, "up"): (1, "b", False, "down", True),
    ("b", False, "down"): (-1, "b", False, "up", True),
})

MAPS = {"U^s": U_S, "U^c": U_C, "V^c": V_C, "V^T": V_T}


def apply_map(m: SymmetryMap, x):
    """Image of a generator (as (phase, generator)) or of a state vector."""
    if isinstance(x, Generator):
        return m.act(x)
    if isinstance(x, Ket):
        x = FockStateVector.of({x: 1})
    out: dict = {}
    for k, c in x.terms:
        coef = c.conjugate() if m.antiunitary else c
        if k is None:
            out[None] = out.get(None, 0) + coef
            continue
        phase, h = m.act(k.creator())
        kk = Ket.from_creator(h)
        out[kk] = out.get(kk, 0) + coef * phase
    return FockStateVector.of(out)


def compose(m1: SymmetryMap, m2: SymmetryMap, x):
    """(m1 o m2) applied to x: m2 first."""
    return apply_map(m1, apply_map(m2, x))


def basis_kets(labels=("p", "-p")) -> list[Ket]:
    return [Ket(c, e, lab) for lab in labels for c in ("+", "-") for e in ETAS]


def compose_check(m1: SymmetryMap, m2: SymmetryMap, labels=("p", "-p")) -> VerificationReport:
    """Classify m1 m2 against m2 m1 on every basis ket: commute, anticommute or neither."""
    rep = VerificationReport(f"compose {m1.name},{m2.name}")
    kinds = set()
    rows = []
    for k in basis_kets(labels):
        s12, s21 = compose(m1, m2, k), compose(m2, m1, k)
        if s12 == s21:
            kinds.add("commute")
        elif s12 == -s21:
            kinds.add("anticommute")
        else:
            kinds.add("neither")
        rows.append((str(k), str(s12), str(s21)))
    verdict = kinds.pop() if len(kinds) == 1 else "neither"
    rep.add(f"{m1.name} {m2.name} vs {m2.name} {m1.name}", "composition of Fock-space maps",
            0.0, passed=True, classification=verdict, table=rows)
    rep.notes.append(f"{m1.name} and {m2.name}: {verdict}")
    return rep


def classify(m1: SymmetryMap, m2: SymmetryMap, labels=("p", "-p")) -> str:
    return compose_check(m1, m2, labels).checks[0].details["classification"]


def square_phase(m: SymmetryMap, labels=("p",)) -> complex | None:
    """Uniform phase c with m(m(k)) = c k on every basis ket, if one exists."""
    phases = set()
    for k in basis_kets(labels):
        img = compose(m, m, k).as_dict()
        if set(img) != {k}:
            return None
        phases.add(img[k])
    return phases.pop() if len(phases) == 1 else None


def roundtrip_ok(m: SymmetryMap, labels=("p", "-p")) -> bool:
    """Applying a map then its inverse returns every generator and ket exactly."""
    inv = m.inverse()
    for k in basis_kets(labels):
        if compose(inv, m, k) != FockStateVector.of({k: 1}):
            return False
    for sp, dg, eta, lab in itertools.product(SPECIES, (False, True), ETAS, labels):
        g = Generator(sp, dg, eta, lab)
        c, h = m.act(g)
        c2, g2 = inv.act(h)
        cc = c.conjugate() if m.antiunitary else c
        if g2 != g or c2 * cc != 1:
            return False
    return True


# -- eigenstates -----------------------------------------------------------------


def parity_relabelled(x: FockStateVector) -> FockStateVector:
    """U^s followed by identifying -p with p (intrinsic parity)."""
    return apply_map(U_S, x).relabel(neg_label)


def eigenvalue(op, x: FockStateVector) -> complex | None:
    """c with op(x) = c x exactly, or None."""
    y = op(x)
    if x.is_zero():
        return None
    k, c = x.terms[0]
    lam = y.as_dict().get(k, 0) / c
    return lam if y == lam * x else None


def c_eigenstates(label: str = "p") -> list[tuple[FockStateVector, complex]]:
    """|p,up>^+ +- i |p,up>^- with their U^c eigenvalues (-+ i)."""
    plus = FockStateVector.ket("+", "up", label)
    minus = FockStateVector.ket("-", "up", label)
    out = []
    for s in (1, -1):
        state = plus + (s * 1j) * minus
        out.append((state, eigenvalue(lambda x: apply_map(U_C, x), state)))
    return out


def parity_eigenstates(label: str = "p") -> list[tuple[FockStateVector, complex]]:
    """|p,up>^+ +- i |p,down>^+ with their (relabelled) parity eigenvalues."""
    up = FockStateVector.ket("+", "up", label)
    down = FockStateVector.ket("+", "down", label)
    return [(up + (s * 1j) * down, eigenvalue(parity_relabelled, up + (s * 1j) * down)) for s in (1, -1)]


def operator_matrix(op, kets: list[Ket]) -> np.ndarray:
    """Matrix of a state map on the span of ``kets`` (columns are images)."""
    idx = {k: i for i, k in enumerate(kets)}
    mat = np.zeros((len(kets), len(kets)), dtype=complex)
    for j, k in enumerate(kets):
        for kk, c in op(FockStateVector.of({k: 1})).terms:
            mat[idx[kk], j] = c
    return mat


def _nullspace_exact(mat) -> list:
    import sympy

    rows = [[sympy.nsimplify(complex(v).real) + sympy.I * sympy.nsimplify(complex(v).imag) for v in r] for r in mat]
    return sympy.Matrix(rows).nullspace()


def simultaneous_eigenstates(max_terms: int | None = 2, label: str = "p") -> list[tuple[tuple[Ket, ...], complex, complex, list]]:
    """Common eigenvectors of relabelled parity and U^c supported on few kets.

    Searches every support of size <= ``max_terms`` (all sizes when None) over the
    four kets at one momentum, with arbitrary complex coefficients, by solving
    (P - alpha) v = 0 and (U^c - beta) v = 0 exactly on that support.
    Returns (support, alpha, beta, coefficient vector) for every hit.
    """
    kets = basis_kets((label,))
    P = operator_matrix(parity_relabelled, kets)
    C = operator_matrix(lambda x: apply_map(U_C, x), kets)
    alphas = sorted({complex(round(v.real), round(v.imag)) for v in np.linalg.eigvals(P)}, key=lambda z: (z.real, z.imag))
    betas = sorted({complex(round(v.real), round(v.imag)) for v in np.linalg.eigvals(C)}, key=lambda z: (z.real, z.imag))
    sizes = range(1, (len(kets) if max_terms is None else max_terms) + 1)
    hits = []
    for size in sizes:
        for support in itertools.combinations(range(len(kets)), size):
            cols = list(support)
            for a in alphas:
                for b in betas:
                    stacked = np.vstack([(P - a * np.eye(4))[:, cols], (C - b * np.eye(4))[:, cols]])
                    for vec in _nullspace_exact(stacked):
                        coeffs = [complex(v) for v in vec]
                        if all(c != 0 for c in coeffs):
                            hits.append((tuple(kets[i] for i in cols), a, b, coeffs))
    return hits


# -- brackets ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BracketToken:
    """(2 pi)^3 2E_p delta^3(p - p') delta_{eta,-eta'} for one species."""

    species: str
    eta: str
    eta_prime: str
    mom: str

    def __str__(self) -> str:
        return f"(2pi)^3 2E_{self.mom} delta^3({self.mom}-{self.mom}') [{self.species}: {self.eta}, {self.eta_prime}]"


def bracket(g1: Generator, g2: Generator):
    """Symbolic (anti)commutator of two generators: a BracketToken or 0."""
    if g1.species != g2.species or g1.dagger == g2.dagger:
        return 0
    if g1.eta == g2.eta or g1.mom != g2.mom:
        return 0
    return BracketToken(g1.species, g1.eta, g2.eta, g1.mom)


# -- time reversal matrix ------------------------------------------------------------

THETA_HALF = np.array([[0, -1], [1, 0]], dtype=complex)


def time_reversal_matrix() -> np.ndarray:
    z = np.zeros((2, 2))
    return np.block([[THETA_HALF, z], [z, THETA_HALF]])
