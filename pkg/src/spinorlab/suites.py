"""Identity suites driven by seeded random momenta; one VerificationReport each."""
from __future__ import annotations

import time
from fractions import Fraction as Fr

import numpy as np

from . import dirac, fockalg, majorana, maxwell, modeexpand, weinberg
from .algebra import BASES, METRIC, FourMomentum, default_tol, energies, gamma, random_momenta, slash
from .report import VerificationReport

SUITES = ("dirac", "majorana", "fock", "maxwell", "weinberg", "modeexpand")

# rational unit vectors for the exact-arithmetic checks
RATIONAL_UNITS = (
    (Fr(0), Fr(0), Fr(1)), (Fr(2, 7), Fr(3, 7), Fr(6, 7)), (Fr(1, 9), Fr(4, 9), Fr(-8, 9)),
    (Fr(-2, 3), Fr(1, 3), Fr(2, 3)), (Fr(3, 5), Fr(-4, 5), Fr(0)), (Fr(-6, 11), Fr(-6, 11), Fr(7, 11)),
)


def _momenta(rng, n, m_range=(0.1, 10.0), max_ratio=10.0):
    return random_momenta(rng, n, m_range, max_ratio)


def _fm(p3, m) -> FourMomentum:
    return FourMomentum(float(m), *map(float, p3))


def dirac_suite(rng, samples: int = 1000, tol: float | None = None) -> VerificationReport:
    tol = default_tol() if tol is None else tol
    rep = VerificationReport("dirac")
    p3, m = _momenta(rng, samples)
    # the helicity basis needs a direction
    p3h = np.where(np.linalg.norm(p3, axis=1, keepdims=True) == 0, [[0.0, 0.0, 1e-3]], p3)
    e = energies(p3, m)
    for basis in ("chiral", "standard"):
        worst = max(float(np.linalg.norm(
            gamma(mu, basis) @ gamma(nu, basis) + gamma(nu, basis) @ gamma(mu, basis) - 2 * METRIC[mu, nu] * np.eye(4)))
            for mu in range(4) for nu in range(4))
        rep.add(f"Clifford relation ({basis})", "{g^mu, g^nu} = 2 g^mu nu", worst, 1e-12)
    for basis in BASES:
        q3 = p3h if basis == "helicity" else p3
        qe = energies(q3, m)
        sl = slash(np.concatenate([qe[:, None], q3], axis=1), basis)
        for kind, sign in (("u", 1), ("v", -1)):
            r = 0.0
            for s in dirac.SIGMAS:
                psi = dirac.spinor_components(kind, q3, m, s, basis)
                op = sl - sign * m[:, None, None] * np.eye(4)
                r = max(r, float(np.max(np.linalg.norm(np.einsum("nij,nj->ni", op, psi), axis=1))))
            rep.add(f"(g.p {'-' if sign > 0 else '+'} m) {kind} = 0 ({basis})", "Dirac equation in momentum space", r, tol)
        eye = np.eye(2)
        for a, b, target, name in (("u", "u", eye, "ubar u = +delta"), ("v", "v", -eye, "vbar v = -delta"),
                                   ("u", "v", 0 * eye, "ubar v = 0")):
            g = dirac.batch_gram(a, b, q3, m, basis)
            rep.add(f"{name} ({basis})", "Gram normalisation", float(np.max(np.abs(g - target))), tol)
    # closed-form table and parity at a handful of momenta
    worst = 0.0
    for i in range(min(samples, 50)):
        p = _fm(p3[i], m[i])
        for kind in dirac.KINDS:
            for s in dirac.SIGMAS:
                ours = dirac.spinor_components(kind, p.vec, p.m, s, "standard")
                worst = max(worst, float(np.max(np.abs(ours - dirac.reference_components(kind, p, s)))))
    rep.add("boosted spinors match closed-form standard table", "u, v in the standard representation", worst, tol)
    rest = FourMomentum(1.0, 0.0, 0.0, 0.0)
    pu = [dirac.parity_eigenvalue(dirac.u_spinor(rest, s)) for s in dirac.SIGMAS]
    pv = [dirac.parity_eigenvalue(dirac.v_spinor(rest, s)) for s in dirac.SIGMAS]
    rep.add("intrinsic parity u +1, v -1", "gamma^0 psi(-p)", 0.0, passed=pu == [1, 1] and pv == [-1, -1],
            u=pu, v=pv)
    spectrum = dirac.barut_mass_spectrum(1.0, 1.0, 1.0)
    golden = sorted([(np.sqrt(5) - 1) / 2, (np.sqrt(5) + 1) / 2])
    got = sorted(x for x in spectrum.masses if x > 1e-9)
    dev = float(np.max(np.abs(np.array(got) - golden))) if len(got) == 2 else float("inf")
    rep.add("Barut masses at alpha=1, beta=m", "Det[g.p + alpha p^2/m - beta] roots", dev, 1e-8, masses=spectrum.masses)
    rep.notes.append(f"energy range sampled: [{e.min():.3g}, {e.max():.3g}]")
    return rep


def majorana_suite(rng, samples: int = 1000, tol: float | None = None) -> VerificationReport:
    tol = default_tol() if tol is None else tol
    rep = VerificationReport("majorana")
    p3, m = _momenta(rng, samples)
    worst = 0.0
    for fam, cls, eta in majorana.LABELS:
        comps = majorana.build_components(fam, cls, eta, p3, m)
        sign = 1 if cls == "S" else -1
        worst = max(worst, float(np.max(np.linalg.norm(majorana.charge_conjugate(comps) - sign * comps, axis=-1))))
    rep.add("S_c lambda^S = +lambda^S, S_c lambda^A = -lambda^A (and rho)", "self/anti-self charge conjugacy", worst, tol)
    rep.extend(majorana.rho_lambda_relations(p3, m, tol))
    grams = majorana.biorthonormal_grams(p3, m)
    expected = majorana.expected_grams(m)
    for fam in majorana.FAMILIES:
        dev = float(np.max(np.abs(grams[fam] - expected[fam])))
        rep.add(f"{fam} bi-orthonormal products", "+-im across opposite eta, others zero", dev, tol)
    swaps, phases = [], set()
    for i in range(min(samples, 25)):
        p = _fm(p3[i], m[i])
        for fam, cls, eta in majorana.LABELS:
            _, lab, c = majorana.parity_map(majorana.spinor(fam, cls, eta, p), tol)
            want = ("rho" if fam == "lambda" else "lambda", "A" if cls == "S" else "S", eta)
            swaps.append(lab == want)
            if c is not None:
                phases.add(complex(np.round(c, 8)))
    rep.add("P lambda^{S,A} = rho^{A,S} (same eta)", "gamma^0 psi(-p) family swap", float(not all(swaps)),
            passed=all(swaps), phases=sorted(phases, key=lambda z: (z.real, z.imag)))
    res, c, _ = majorana.connection_check(p3, m, tol)
    rep.add("lambda = c sqrt(m) M (u, v)", "connection matrix with Dirac spinors", res, tol, calibration=c)
    worst = 0.0
    for i in range(min(samples, 25)):
        p = _fm(p3[i], m[i])
        for lab in majorana.LABELS:
            worst = max(worst, float(np.max(np.abs(
                majorana.build_components(*lab, p.vec, p.m) - majorana.printed_components(*lab, p)))))
    rep.add("boosted spinors match the printed closed forms", "lambda, rho component tables", worst, tol)
    rep.extend(majorana.dynamical_residuals(p3, m, tol))
    rep.extend(majorana.xi_property(_fm(p3[0], m[0]) if np.linalg.norm(p3[0]) > 0 else FourMomentum(1.0, 0.3, 0.2, 0.1), tol))
    return rep


def fock_suite(rng=None, samples: int = 1, tol: float | None = None) -> VerificationReport:
    rep = VerificationReport("fock")
    pairs = (("U^c", "U^s", "commute"), ("V^c", "U^s", "anticommute"))
    for a, b, want in pairs:
        sub = fockalg.compose_check(fockalg.MAPS[a], fockalg.MAPS[b])
        got = sub.checks[0].details["classification"]
        rep.add(f"{a}, {b} {want}", "exact phase arithmetic on every basis ket", float(got != want),
                passed=got == want, classification=got, table=sub.checks[0].details["table"])
    eig = fockalg.c_eigenstates()
    vals = [v for _, v in eig]
    rep.add("|up>^+ +- i|up>^- have U^c eigenvalues -+i", "C eigenstates", float(vals != [-1j, 1j]),
            passed=vals == [-1j, 1j], eigenvalues=vals, states=[str(s) for s, _ in eig])
    pe = fockalg.parity_eigenstates()
    pv = [v for _, v in pe]
    rep.add("|up>^+ +- i|down>^+ are parity eigenstates", "relabelled U^s", 0.0,
            passed=all(v is not None for v in pv), eigenvalues=pv)
    short = fockalg.simultaneous_eigenstates(2)
    rep.add("no simultaneous P/U^c eigenstate with 1 or 2 terms", "exhaustive exact search", float(len(short)),
            passed=not short)
    longer = fockalg.simultaneous_eigenstates(None)
    rep.notes.append(f"simultaneous P/U^c eigenstates with up to 4 terms: {len(longer)} "
                     f"(all with {sorted({len(h[0]) for h in longer})} terms)")
    for name, m in fockalg.MAPS.items():
        sq = fockalg.square_phase(m)
        rep.add(f"{name} round trip", "inverse map", 0.0, passed=fockalg.roundtrip_ok(m), square=sq)
    s = fockalg.time_reversal_matrix()
    rep.add("S(T) S(T)^* = -1", "antiunitary time reversal", float(np.linalg.norm(s @ s.conj() + np.eye(4))), 0.0)
    return rep


def maxwell_suite(rng, samples: int = 100, tol: float | None = None) -> VerificationReport:
    rep = VerificationReport("maxwell")
    ks = rng.normal(size=(samples, 3)) * rng.uniform(0.1, 10.0, size=(samples, 1))
    worst_eig, worst_poly = 0.0, 0.0
    for k in ks:
        kn = float(np.linalg.norm(k))
        want = np.array([-kn, 0.0, kn])
        for sign in (1, -1):
            worst_eig = max(worst_eig, float(np.max(np.abs(np.array(maxwell.rs_roots(k, sign)) - want))) / max(kn, 1.0))
        poly = maxwell.rs_characteristic(k)
        roots = sorted(r.real for r in poly.trimmed().roots())
        worst_poly = max(worst_poly, float(np.max(np.abs(np.array(roots) - want))) / max(kn, 1.0))
    rep.add("Det[E -+ S.p] roots = {-|p|, 0, +|p|}", "causal and acausal E=0 roots", worst_eig, 1e-12)
    rep.add("interpolated Det[E - S.p] roots = {-|p|, 0, +|p|}", "characteristic polynomial", worst_poly, 1e-10)
    ints = rng.integers(-9, 10, size=(samples, 3))
    worst_sq, worst_kg = 0.0, 0.0
    for i, k in enumerate(ints):
        worst_sq = max(worst_sq, float(np.max(np.abs(maxwell.spin1_square_residual(k)))))
        e = int(rng.integers(-9, 10))
        p = FourMomentum(float(i % 5 + 1), *map(float, k), -1 if e < 0 else 1, float(abs(e)))
        psi = rng.integers(-5, 6, size=3).astype(float)
        expected = (p.p0**2 - p.vec @ p.vec - p.m**2) * psi
        worst_kg = max(worst_kg, float(np.max(np.abs(maxwell.kg_factorization_spin1(p, psi) - expected))))
    rep.add("(S.p)^2 = p^2 - p p^T", "spin-1 square identity", worst_sq, 0.0)
    rep.add("spin-1 KG factorisation = (E^2 - p^2 - m^2) psi", "off-shell integer momenta", worst_kg, 0.0)
    worst = 0.0
    for k in ks[:20]:
        kn = float(np.linalg.norm(k))
        e0 = np.cross(k, rng.normal(size=3))
        wave = maxwell.FieldTriple.make(e0, np.cross(k / kn, e0), 0.0, k, kn)
        chi = maxwell.FieldTriple.make(k / kn * 0.7, np.zeros(3), 0.7 * kn / kn, k, kn)
        worst = max(worst, maxwell.maxwell_residual(wave).norm(), maxwell.maxwell_residual(chi).norm())
    rep.add("transverse and chi-driven longitudinal plane waves solve the system", "Maxwell with gradient chi",
            worst, default_tol() if tol is None else tol)
    d = maxwell.chiral_mass_dispersion(1.3, 0.5, ks[0])
    dev = max(abs(x - (1.3**2 - 0.5**2)) for x in d.mass2)
    rep.add("Det[g.p + m1 + m2 g5] gives m^2 = m1^2 - m2^2", "chiral mass term", dev, 1e-8,
            multiplicities=[k for _, k in d.roots])
    return rep


def weinberg_suite(rng, samples: int = 1000, tol: float | None = None) -> VerificationReport:
    tol = default_tol() if tol is None else tol
    rep = VerificationReport("weinberg")
    p3, m = _momenta(rng, samples, (0.5, 2.0), 3.0)
    A, B = weinberg.tucker_hammer_coefficients()
    ann, pair, par, boost, cov = 0.0, 0.0, [], 0.0, 0.0
    for i in range(samples):
        p = _fm(p3[i], m[i])
        for s in weinberg.SIGMAS1:
            col = weinberg.printed_u1(p, s)
            scale = max(1.0, float(np.linalg.norm(col)) * p.E**2)
            ann = max(ann, weinberg.wth_residual(col, p, A, B) / scale)
            vcol = weinberg.v1_spinor(p, s).components
            ann = max(ann, weinberg.wth_residual(vcol, p, -A, -B) / scale)
            boost = max(boost, float(np.max(np.abs(col - weinberg.boosted_u1(p, s)))) / max(1.0, p.E))
            if i < 20:
                par.append((weinberg.boson_parity(weinberg.u1_spinor(p, s)), weinberg.boson_parity(weinberg.v1_spinor(p, s))))
                r1, r2 = weinberg.coupled_residual(p, weinberg.u1_spinor(p, s))
                pair = max(pair, float(np.linalg.norm(r1) + np.linalg.norm(r2)) / scale)
        if i < 20:
            cov = max(cov, weinberg.pi_covariance_residual(p.__class__(p.m, *p.vec), 0.4, (0.2, -0.5, 0.8)))
    rep.add("printed u columns = boosted rest columns", "spin-1 bivector table", boost, 1e-9)
    rep.add("(A,B) = (1,2) operator annihilates u; (-1,-2) annihilates v", "Tucker-Hammer operator", ann, 1e-9)
    rep.add("u solves the coupled Phi/Xi equations", "first-order spin-1 system", pair, 1e-9)
    rep.add("boson parity u +1, v -1", "diag(1,-1) psi(-p)", 0.0,
            passed=all(a == 1 and b == -1 for a, b in par))
    rep.add("Pi(q) covariance under boosts", "Pi = E + S.p generalisation", cov, 1e-9)
    n = min(samples, 40)
    degs, rel, zero, fact = set(), True, False, 0.0
    for i in range(n):
        q = p3[i] if np.linalg.norm(p3[i]) > 0 else np.array([0.3, 0.0, 0.0])
        d = weinberg.dispersion_spectrum(A, B, q, m[i])
        degs.add(d.degree)
        rel &= d.all_relativistic
        zero |= d.zero_root
        for e in (0.37, 1.21, 2.9):
            exact = np.linalg.det(weinberg.wth_operator(weinberg.EuclideanMomentum(*q, e), A, B, m[i]))
            ref = weinberg.factorized_determinant(A, B, q, m[i], e)
            fact = max(fact, abs(exact - ref) / max(abs(ref), 1.0))
    rep.add("Det = [(B m^2 - (A+1)x)(B m^2 - (A-1)x)]^3, x = E^2 - p^2", "dispersion determinant", fact, 1e-8)
    rep.add("(1,2): every root has E^2 = p^2 + m^2", "Tucker-Hammer dispersion", float(not rel), passed=rel)
    rep.add("(1,2): no E = 0 root for p != 0", "no acausal solution", float(zero), passed=not zero)
    rep.add("(1,2): determinant degree 12", "dispersion determinant degree", float(degs != {12}),
            passed=degs == {12}, degrees=sorted(degs))
    gen = weinberg.dispersion_spectrum(2.0, 3.0, p3[1], m[1])
    rep.add("(2,3) on B/(A+1)=1: every root relativistic", "relativistic dispersion family", float(not gen.all_relativistic),
            passed=gen.all_relativistic, degree=gen.degree,
            kinds=[r.kind for r in gen.roots], extra_branch=weinberg.extra_branch(2.0, 3.0, float(m[1])))
    rep.notes.append("degree is 6 when A = +-1: the (A -+ 1) factor becomes constant")
    rep.notes.append("for A != 1 the B = A + 1 family carries a second branch E^2 - p^2 = (A+1) m^2/(A-1)")
    return rep


def modeexpand_suite(rng, samples: int = 1000, tol: float | None = None) -> VerificationReport:
    tol = default_tol() if tol is None else tol
    rep = VerificationReport("modeexpand")
    p3, m = _momenta(rng, samples)
    p3 = np.where(np.linalg.norm(p3, axis=1, keepdims=True) < 1e-9, [[0.0, 0.0, 0.05]], p3)
    four, basis, three = 0.0, 0.0, []
    for i in range(samples):
        k = _fm(p3[i], m[i])
        lam = modeexpand.dirac_cross_gram(k)
        four = max(four, float(np.max(np.abs(lam - modeexpand.dirac_cross_gram_expected(k)))) / max(1.0, k.m))
        basis = max(basis, float(np.max(np.abs(lam - modeexpand.dirac_cross_gram(k, basis="chiral")))))
        if i < 20:
            alt = modeexpand.dirac_cross_gram(k, "three-vector")
            three.append(float(np.max(np.abs(alt - k.norm * modeexpand.sigma_dot(k.n_hat)))))
    rep.add("vbar(k) u(-k) = -i m sigma.n (four-vector reflection)", "Dirac cross-Gram", four, tol)
    rep.add("cross-Gram is basis independent", "chiral vs standard", basis, tol)
    rep.add("three-vector reflection gives |k| sigma.n instead", "Dirac cross-Gram, k0 kept positive",
            max(three), tol)
    rep.add("(i sigma.n)(-i sigma.n) = I", "exact rational arithmetic", 0.0,
            passed=all(modeexpand.exact_pauli_square(n) for n in RATIONAL_UNITS))
    rep.add("[1 - 2(S.n)^2]^2 = I", "exact rational arithmetic", 0.0,
            passed=all(modeexpand.exact_reflection_square(n) for n in RATIONAL_UNITS))
    rep.add("R(z) = diag(-1, 1, -1)", "spin-1 reflection along z",
            float(np.max(np.abs(modeexpand.reflection_matrix([0, 0, 1]) - np.diag([-1, 1, -1])))), tol)
    orth = max(float(np.max(np.abs(modeexpand.tetrad_gram(_fm(p3[i], m[i])) - METRIC))) for i in range(min(samples, 50)))
    rep.add("boosted tetrad is Lorentz orthonormal", "eps^* g eps = g", orth, tol)
    k = FourMomentum(1.3, 0.4, -0.7, 1.1)
    _, r_rep = modeexpand.spin1_reflection(k, tol)
    rep.extend(r_rep)
    for fn in (modeexpand.vector_a_matrix, modeexpand.vector_b_matrix):
        _, sub = fn(k)
        rep.checks.append(sub.checks[0])
        rep.notes.extend(sub.notes[:1])
        rep.checks[-1].details["diff"] = [
            {"entry": c.identity.split()[0], "rel_diff": c.max_residual, "agrees": c.details["agrees"],
             "oracle": c.details["oracle"], "printed": c.details["printed"]} for c in sub.checks[1:]]
    samples_split = [(FourMomentum(1.0, 0.1, 0.2, 0.3), 1.0), (FourMomentum(1.0, 0.1, 0.2, 0.3, -1), 2.0),
                     (FourMomentum(0.0, 0.0, 0.0, 0.0, 1, 0.0), 3.0)]
    split = modeexpand.frequency_split(samples_split)
    back = split.reconstruct()
    ok = len(back) == len(samples_split) and {a for _, a in back} == {1.0, 2.0, 3.0}
    rep.add("theta split partitions the samples; k0 = 0 quarantined", "theta(k0) + theta(-k0)", 0.0,
            passed=ok and len(split.quarantined) == 1, diagnostics=split.diagnostics)
    return rep


_RUNNERS = {
    "dirac": dirac_suite,
    "majorana": majorana_suite,
    "fock": fock_suite,
    "maxwell": maxwell_suite,
    "weinberg": weinberg_suite,
    "modeexpand": modeexpand_suite,
}


def run_suite(name: str, seed: int = 7, samples: int | None = None, tol: float | None = None) -> VerificationReport:
    """Run one suite (or "all") with a fresh seeded generator per suite."""
    if name == "all":
        out = VerificationReport("all")
        t0 = time.perf_counter()
        for sub in SUITES:
            r = run_suite(sub, seed, samples, tol)
            for c in r.checks:
                c.identity = f"{sub}: {c.identity}"
            out.extend(r)
        out.timing = time.perf_counter() - t0
        return out
    if name not in _RUNNERS:
        raise KeyError(name)
    rng = np.random.default_rng(seed)
    t0 = time.perf_counter()
    kwargs = {"tol": tol}
    if samples is not None:
        kwargs["samples"] = samples
    rep = _RUNNERS[name](rng, **kwargs)
    rep.timing = time.perf_counter() - t0
    return rep
