from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import momenta, oracle_gamma_chiral
from spinorlab import algebra as A


@pytest.mark.parametrize("basis", ["chiral", "standard"])
def test_clifford_relation(basis):
    for mu, nu in itertools.product(range(4), repeat=2):
        anti = A.gamma(mu, basis) @ A.gamma(nu, basis) + A.gamma(nu, basis) @ A.gamma(mu, basis)
        assert np.allclose(anti, 2 * A.METRIC[mu, nu] * np.eye(4), atol=1e-12)


def test_chiral_table_matches_hand_written():
    for mu, g in enumerate(oracle_gamma_chiral()):
        assert np.array_equal(A.gamma(mu, "chiral"), g)
    assert np.array_equal(A.gamma(5, "chiral"), np.diag([1, 1, -1, -1]).astype(complex))


def test_bases_related_by_fixed_unitary():
    u = A.CHIRAL_TO_STANDARD
    assert np.allclose(u @ u.conj().T, np.eye(4))
    for mu in (0, 1, 2, 3, 5):
        assert np.allclose(u @ A.gamma(mu, "chiral") @ u.conj().T, A.gamma(mu, "standard"), atol=1e-15)


def test_gamma_index_validation():
    with pytest.raises(ValueError):
        A.gamma(4)
    with pytest.raises(ValueError):
        A.gamma(0, "nosuch")


@pytest.mark.parametrize("basis", ["cartesian", "spherical"])
def test_spin1_algebra(basis):
    s = A.spin1_matrices(basis)
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        assert np.allclose(s[i] @ s[j] - s[j] @ s[i], 1j * s[k], atol=1e-15)
    casimir = sum(x @ x for x in s)
    assert np.allclose(casimir, 2 * np.eye(3))


def test_spherical_s3_is_diagonal():
    assert np.allclose(A.spin1_matrices("spherical")[2], np.diag([1, 0, -1]))


@given(st.lists(st.floats(-5, 5), min_size=3, max_size=3))
def test_sigma_dot_square(n):
    n = np.array(n)
    sd = A.sigma_dot(n)
    assert np.allclose(sd @ sd, (n @ n) * np.eye(2), atol=1e-12)


@given(momenta())
def test_four_momentum_on_shell(p):
    assert abs(p.invariant_mass2() - p.m**2) <= 1e-10 * max(1.0, p.E**2)
    assert p.p_plus * p.p_minus == pytest.approx(p.m**2 + p.px**2 + p.py**2, rel=1e-10)
    assert p.p_r * p.p_l == pytest.approx(p.px**2 + p.py**2, abs=1e-9)


def test_four_momentum_reflections():
    p = A.FourMomentum(1.0, 0.2, 0.3, -0.4)
    assert np.allclose(p.reflected().four, [p.E, -0.2, -0.3, 0.4])
    assert np.allclose(p.negated().four, -p.four)
    with pytest.raises(ValueError):
        A.FourMomentum(-1.0)


@given(momenta())
def test_half_boost_takes_rest_to_p(p):
    # Lambda_R Lambda_R^dag = (E + sigma.p)/m; Lambda_L Lambda_L^dag = (E - sigma.p)/m
    r = A.boost_matrix("(1/2,0)", p)
    l = A.boost_matrix("(0,1/2)", p)
    sp = A.sigma_dot(p.vec)
    assert np.allclose(r @ r.conj().T, (p.E * np.eye(2) + sp) / p.m, atol=1e-9 * p.E / p.m)
    assert np.allclose(l @ l.conj().T, (p.E * np.eye(2) - sp) / p.m, atol=1e-9 * p.E / p.m)
    assert np.allclose(r @ l, np.eye(2), atol=1e-9 * p.E / p.m)


@given(momenta(nonzero=True))
def test_rapidity_and_momentum_boosts_agree(p):
    bp = A.boost_params(p)
    for rep in ("(1/2,0)", "(0,1/2)", "(1,0)", "(0,1)"):
        a = A.boost_matrix(rep, p)
        b = A.boost_from_rapidity(rep, bp.rapidity, bp.axis)
        assert np.allclose(a, b, atol=1e-9 * (p.E / p.m) ** 2)


@given(momenta())
def test_vector_boost(p):
    lam = A.vector_boost(p)
    assert np.allclose(lam @ np.array([p.m, 0, 0, 0]), p.four, atol=1e-9 * p.E)
    assert np.allclose(lam.T @ A.METRIC @ lam, A.METRIC, atol=1e-9 * (p.E / p.m) ** 2)


def test_massless_boost_rejected():
    with pytest.raises(ValueError):
        A.boost_matrix("(1/2,0)", A.FourMomentum(0.0, 0, 0, 1))


def test_tolerance_env(monkeypatch):
    monkeypatch.setenv(A.TOL_ENV, "1e-6")
    assert A.default_tol() == 1e-6
    monkeypatch.setenv(A.TOL_ENV, "-1")
    with pytest.raises(ValueError):
        A.default_tol()
    monkeypatch.delenv(A.TOL_ENV)
    assert A.default_tol() == A.DEFAULT_TOL


def test_random_momenta_reproducible():
    a = A.random_momenta(np.random.default_rng(3), 10)
    b = A.random_momenta(np.random.default_rng(3), 10)
    assert all(np.array_equal(x, y) for x, y in zip(a, b))
    p3, m = a
    assert np.all(np.linalg.norm(p3, axis=1) <= 10 * m + 1e-12)


def test_bmw_matrices_symmetric():
    for mu, nu in itertools.product(range(1, 5), repeat=2):
        assert np.allclose(A.bmw_gamma(mu, nu), A.bmw_gamma(nu, mu))
