from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import momenta
from spinorlab import majorana as M
from spinorlab.algebra import FourMomentum, _half_boost, gamma

labels = st.sampled_from(M.LABELS)
THETA = np.array([[0, -1], [1, 0]], dtype=complex)


def oracle(family, cls, eta, p):
    """Rest spinor by hand, boosted with the textbook (E + m +- sigma.p)/sqrt(2m(E+m))."""
    phi = np.sqrt(p.m / 2) * (np.array([1, 0]) if eta == "up" else np.array([0, 1])).astype(complex)
    s = 1 if cls == "S" else -1
    if family == "lambda":
        rest = np.concatenate([s * 1j * THETA @ phi.conj(), phi])
    else:
        rest = np.concatenate([phi, -s * 1j * THETA @ phi.conj()])
    from spinorlab.algebra import sigma_dot

    d = np.sqrt(2 * p.m * (p.E + p.m))
    lr = ((p.E + p.m) * np.eye(2) + sigma_dot(p.vec)) / d
    ll = ((p.E + p.m) * np.eye(2) - sigma_dot(p.vec)) / d
    return np.concatenate([lr @ rest[:2], ll @ rest[2:]])


def test_rest_lambda_s_up():
    assert np.allclose(M.lambda_rest("S", "up", 2.0).components, [0, 1j, 1, 0])


@given(momenta(), labels)
def test_boosted_matches_oracle_and_printed(p, lab):
    c = M.spinor(*lab, p).components
    scale = np.sqrt(p.E)
    assert np.allclose(c, oracle(*lab, p), atol=1e-12 * scale)
    assert np.allclose(c, M.printed_components(*lab, p), atol=1e-12 * scale)


@given(momenta(), labels)
def test_charge_conjugation_classes(p, lab):
    psi = M.spinor(*lab, p)
    assert M.conjugacy_residual(psi, lab[1]) <= 1e-10 * max(1.0, np.sqrt(p.E))
    # C is an antilinear involution
    c = psi.components
    assert np.allclose(M.charge_conjugate(M.charge_conjugate(c)), c, atol=1e-12 * np.sqrt(p.E))


def test_charge_conjugate_is_antilinear():
    c = np.array([1, 2j, 3, -1j])
    assert np.allclose(M.charge_conjugate(1j * c), -1j * M.charge_conjugate(c))


@given(momenta())
def test_rho_lambda_relations(p):
    rep = M.rho_lambda_relations(p.vec, p.m)
    assert rep.passed, rep.to_text()


@given(momenta())
def test_biorthonormal_pattern(p):
    g = M.biorthonormal_grams(p.vec, p.m)
    e = M.expected_grams(p.m)
    for fam in M.FAMILIES:
        assert np.allclose(g[fam], e[fam], atol=1e-10 * max(1.0, p.E))


@given(momenta(), st.floats(-np.pi, np.pi), st.floats(-np.pi, np.pi))
def test_gram_phase_dependence(p, t1, t2):
    g = M.biorthonormal_grams(p.vec, p.m, t1, t2)["lambda"]
    # S-up/S-down entry scales with cos(t1 + t2); S-A cross entries with sin(t1 + t2)
    assert g[0, 1] == pytest.approx(-1j * p.m * np.cos(t1 + t2), abs=1e-9 * p.E)
    assert abs(g[0, 3]) == pytest.approx(p.m * abs(np.sin(t1 + t2)), abs=1e-9 * p.E)


@given(momenta(nonzero=True), labels)
def test_parity_swaps_family_and_class(p, lab):
    _, got, phase = M.parity_map(M.spinor(*lab, p))
    fam, cls, eta = lab
    assert got == ("rho" if fam == "lambda" else "lambda", "A" if cls == "S" else "S", eta)
    assert phase == pytest.approx(1.0)


@given(momenta(nonzero=True), labels)
def test_parity_squares_to_identity(p, lab):
    psi = M.spinor(*lab, p)
    image, _, _ = M.parity_map(psi)
    twice, _, _ = M.parity_map(image)
    assert np.allclose(twice.components, psi.components, atol=1e-12 * np.sqrt(p.E))


def test_coupled_equations_unique_convention():
    rng = np.random.default_rng(1)
    p3, m = (rng.normal(size=(50, 3)), rng.uniform(0.1, 5, size=50))
    rep = M.dynamical_residuals(p3, m)
    assert rep.passed, rep.to_text()
    assert rep["unique frequency-sign convention"].details["conventions"] == 1


@given(momenta())
def test_coupled_equations_oracle(p):
    # positive-frequency lambda^S pairs with rho^A: (g.p) lambda^S = m rho^A
    sl = M.dirac_operator(p)
    for eta in M.ETAS:
        ls = M.spinor("lambda", "S", eta, p).components
        ra = M.spinor("rho", "A", eta, p).components
        assert np.allclose(sl @ ls, p.m * ra, atol=1e-10 * p.E)


@given(momenta())
def test_connection_matrix(p):
    res, c, _ = M.connection_check(p.vec[None], np.array([p.m]))
    assert res <= 1e-10 * max(1.0, p.E)
    assert abs(c) == pytest.approx(1.0)


def test_connection_matrix_determinant():
    mat = M.connection_matrix()
    assert np.linalg.det(mat) == pytest.approx(-1.0)
    assert np.allclose(mat @ mat.conj().T, np.eye(4))


@given(momenta(), labels, st.floats(-3, 3))
def test_chiral_gauge_preserves_class(p, lab, alpha):
    t = M.chiral_gauge_transform(M.spinor(*lab, p), alpha)
    assert M.conjugacy_residual(t, lab[1]) <= 1e-10 * max(1.0, np.sqrt(p.E))


@given(momenta(nonzero=True))
def test_xi_identities(p):
    if np.hypot(p.px, p.py) < 1e-6 * p.m:
        return
    assert M.xi_property(p).passed


def test_xi_conjugates_boosts_oracle():
    p = FourMomentum(1.0, 0.4, 0.3, -0.2)
    xi = M.xi_matrix(p)
    lam = _half_boost(p.vec, p.m, 1)
    assert np.allclose(xi @ lam @ np.linalg.inv(xi), lam.conj())


def test_massless_limit_scaling():
    up = M.massless_limit("up")
    assert up.passed, up.to_text()
    seq = M.massless_sequence(1.0, (0.3, -0.5, 0.8))
    ratio = np.array(seq["ratio"]["S"])
    assert np.allclose(ratio, np.array(seq["m_over_E"]) / 2, rtol=1e-3)
    assert M.massless_limit("down").passed


def test_invalid_labels():
    with pytest.raises(ValueError):
        M.lambda_rest("X", "up")
    with pytest.raises(ValueError):
        M.massless_limit("sideways")


def test_gamma0_consistent():
    assert np.array_equal(M.GAMMA0, gamma(0, "chiral"))
