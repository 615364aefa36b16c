from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import momenta
from spinorlab import weinberg as W
from spinorlab.algebra import FourMomentum, sigma_dot, spin_dot

sigmas = st.sampled_from(W.SIGMAS1)
moderate = momenta(max_ratio=3.0)


@given(moderate)
def test_pi_spin_half_closed_form(p):
    assert np.allclose(W.pi_matrix(p, 0.5, "cartesian"), p.E * np.eye(2) + sigma_dot(p.vec), atol=1e-9 * p.E)


@given(moderate)
def test_pi_spin_one_closed_form(p):
    sp = spin_dot(p.vec, "1", "spherical")
    oracle = p.m**2 * np.eye(3) + 2 * p.E * sp + 2 * sp @ sp
    assert np.allclose(W.pi_matrix(p), oracle, atol=1e-9 * p.E**2)


@given(moderate)
def test_pi_pibar_product(p):
    assert np.allclose(W.pi_matrix(p) @ W.pibar_matrix(p), p.m**4 * np.eye(3), atol=1e-8 * p.E**4)


def test_pi_at_rest():
    assert np.allclose(W.pi_matrix(FourMomentum(1.7)), 1.7**2 * np.eye(3))


@given(moderate, st.floats(-1.5, 1.5), st.lists(st.floats(-1, 1), min_size=3, max_size=3).filter(
    lambda v: np.linalg.norm(v) > 0.1))
def test_pi_covariance(p, rap, axis):
    for s in (0.5, 1):
        assert W.pi_covariance_residual(p, rap, axis, s) <= 1e-9 * p.E**2 * np.cosh(rap) ** 4


def test_printed_rest_columns():
    p = FourMomentum(1.3)
    assert np.allclose(W.printed_u1(p, 1), [1.3, 0, 0, 0, 0, 0])
    pz = FourMomentum(1.3, 0, 0, 0.8)
    col = W.printed_u1(pz, 0)
    assert np.allclose(col[[0, 2, 4]], 0) and col[1] == pytest.approx(1.3)


@given(moderate, sigmas)
def test_printed_equals_boosted(p, s):
    assert np.allclose(W.printed_u1(p, s), W.boosted_u1(p, s), atol=1e-9 * p.E)


@given(moderate, sigmas)
def test_tucker_hammer_annihilates_u(p, s):
    A, B = W.tucker_hammer_coefficients()
    col = W.printed_u1(p, s)
    assert W.wth_residual(col, p, A, B) <= 1e-9 * p.E**3


@given(moderate, sigmas)
def test_v_annihilated_by_opposite_sign_operator(p, s):
    col = W.v1_spinor(p, s).components
    assert W.wth_residual(col, p, -1.0, -2.0) <= 1e-9 * p.E**3


def test_tucker_hammer_coefficients():
    assert W.tucker_hammer_coefficients() == (1.0, 2.0)


@given(moderate, sigmas)
def test_coupled_equations_u(p, s):
    r1, r2 = W.coupled_residual(p, W.u1_spinor(p, s))
    assert np.linalg.norm(r1) + np.linalg.norm(r2) <= 1e-9 * p.E**3


def test_coupled_equations_v_fail_for_p_nonzero():
    p = FourMomentum(1.0, 0.3, 0.2, 0.5)
    r1, r2 = W.coupled_residual(p, W.v1_spinor(p, 1))
    assert np.linalg.norm(r1) + np.linalg.norm(r2) > 1e-3


def test_operator_rest_form():
    m = 1.2
    op = W.wth_operator(W.EuclideanMomentum(0, 0, 0, m), 1.0, 2.0, m)
    from spinorlab.algebra import bmw_gamma

    expected = bmw_gamma(4, 4, "spherical", "standard") * (1j * m) ** 2 + (-m * m + 2 * m * m) * np.eye(6)
    assert np.allclose(op, expected)


@given(moderate)
def test_operator_even_in_p(p):
    q = W.EuclideanMomentum.from_four(p)
    mq = W.EuclideanMomentum(-q.p1, -q.p2, -q.p3, -q.energy)
    assert np.allclose(W.wth_operator(q, 1, 2, p.m), W.wth_operator(mq, 1, 2, p.m))


@given(moderate, st.floats(-3, 3), st.floats(0.5, 4), st.floats(-4, 4))
def test_determinant_factorisation(p, A, B, e):
    q = W.EuclideanMomentum(*p.vec, e)
    exact = np.linalg.det(W.wth_operator(q, A, B, p.m))
    ref = W.factorized_determinant(A, B, p.vec, p.m, e)
    assert exact == pytest.approx(ref, rel=1e-8, abs=1e-8 * (p.E**2 + e * e + B * p.m**2) ** 6)


def test_tucker_hammer_dispersion():
    d = W.dispersion_spectrum(1, 2, [1, 0, 0], 1)
    assert d.all_relativistic and not d.zero_root
    assert sorted(r.multiplicity for r in d.roots) == [3, 3]
    assert np.allclose(sorted(r.energy.real for r in d.roots), [-np.sqrt(2), np.sqrt(2)])


def test_tucker_hammer_degree_is_six():
    # the (A - 1) factor is constant at A = 1
    assert W.dispersion_spectrum(1, 2, [0.3, -0.2, 0.5], 1.1).degree == 6


def test_generic_family_member_has_extra_branch():
    d = W.dispersion_spectrum(2, 3, [0.4, 0, 2], 1.3)
    assert d.degree == 12
    kinds = sorted({r.kind for r in d.roots})
    assert kinds == ["other", "relativistic"]
    x = W.extra_branch(2, 3, 1.3)
    other = [r.energy for r in d.roots if r.kind == "other"]
    assert np.allclose([e * e - 4.16 for e in other], x)


def test_weinberg_case_flags_non_relativistic():
    d = W.dispersion_spectrum(0, 1, [0.4, 0, 2], 1.3)
    assert not d.all_relativistic
    assert any(r.kind == "other" for r in d.roots)


def test_weinberg_case_sixfold_zero_root_at_p_equal_m():
    d = W.dispersion_spectrum(0, 1, [1, 0, 0], 1)
    zero = [r for r in d.roots if r.kind == "acausal"]
    assert len(zero) == 1 and zero[0].multiplicity == 6


@given(st.floats(-3, 3).filter(lambda a: abs(abs(a) - 1) > 0.05), st.floats(0.5, 3))
def test_generic_degree_twelve(A, B):
    d = W.dispersion_spectrum(A, B, [0.3, 0.1, 0.4], 1.0)
    assert d.degree == 12
    assert d.interpolation_check < 1e-8


@given(moderate, sigmas)
def test_boson_parity(p, s):
    assert W.boson_parity(W.u1_spinor(p, s)) == 1
    assert W.boson_parity(W.v1_spinor(p, s)) == -1


def test_mixed_parity_not_eigenstate():
    p = FourMomentum(1.0, 0.3, 0.1, -0.2)
    assert W.boson_parity(W.u1_spinor(p, 1) + W.v1_spinor(p, 1)) is None


def test_invalid_inputs():
    with pytest.raises(ValueError):
        W.u1_spinor(FourMomentum(1.0), 2)
    with pytest.raises(ValueError):
        W.pi_matrix(FourMomentum(1.0), s=2)
