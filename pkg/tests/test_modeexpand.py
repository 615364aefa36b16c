from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import momenta
from spinorlab import modeexpand as M
from spinorlab.algebra import FourMomentum, sigma_dot
from spinorlab.suites import RATIONAL_UNITS

moving = momenta(nonzero=True)
METRIC = np.diag([1.0, -1, -1, -1])


def oracle_cross_gram(k):
    # -i m sigma.n written out entrywise
    n1, n2, n3 = k.n_hat
    return -1j * k.m * np.array([[n3, n1 - 1j * n2], [n1 + 1j * n2, -n3]])


@given(moving)
def test_dirac_cross_gram_standard(k):
    g = M.dirac_cross_gram(k)
    assert np.allclose(g, oracle_cross_gram(k), atol=1e-10 * k.E)


@given(moving)
def test_dirac_cross_gram_basis_independent(k):
    assert np.allclose(M.dirac_cross_gram(k, basis="chiral"), M.dirac_cross_gram(k), atol=1e-10 * k.E)


@given(moving)
def test_three_vector_reflection_gives_norm_p(k):
    g = M.dirac_cross_gram(k, "three-vector")
    assert np.allclose(g, k.norm * sigma_dot(k.n_hat), atol=1e-10 * k.E)


def test_continued_u_matches_on_shell_u():
    k = FourMomentum(1.5, 0.3, -0.4, 0.9)
    u = M.dirac_u_continued(k.E, k.vec, k.m, 0.5)
    ubar_u = u.conj() @ np.diag([1, 1, -1, -1]) @ u
    assert ubar_u == pytest.approx(k.m)


@given(moving)
def test_relation_matrices_inverse(k):
    b, a = M.dirac_relation_matrices(k)
    assert np.allclose(b @ a, np.eye(2))


@pytest.mark.parametrize("n", RATIONAL_UNITS)
def test_exact_identities(n):
    assert M.exact_pauli_square(n)
    assert M.exact_reflection_square(n)


def test_exact_identity_rejects_non_unit():
    with pytest.raises(ValueError):
        M.exact_pauli_square((Fraction(1), Fraction(1), Fraction(0)))


@pytest.mark.parametrize("frame", ["fixed", "helicity"])
@given(k=moving)
def test_tetrad_orthonormal(k, frame):
    assert np.allclose(M.tetrad_gram(k, frame), METRIC, atol=1e-10 * (k.E / k.m) ** 2)


@given(moving)
def test_polarization_transverse(k):
    for pol in M.polarization_tetrad(k)[1:]:
        assert abs(pol.components @ METRIC @ k.four) <= 1e-10 * k.E**2 / k.m


def test_rest_tetrad():
    k = FourMomentum(2.0)
    eps = np.array([p.components for p in M.polarization_tetrad(k)])
    assert np.allclose(eps[0], [1, 0, 0, 0])
    assert np.allclose(eps[3], [0, 0, 0, 1])
    assert np.allclose(eps[1], -np.array([0, 1, 1j, 0]) / np.sqrt(2))


@given(moving)
def test_a_matrix_matches_printed(k):
    mat, rep = M.vector_a_matrix(k)
    assert "16/16" in rep.notes[0]
    assert np.allclose(mat, M.printed_a_matrix(k), atol=1e-8)


def test_a_matrix_convention():
    mat, rep = M.vector_a_matrix(FourMomentum(1.0, 0.3, 0.5, 0.7))
    head = rep.checks[0].details
    assert head["reflection"] == "four-vector" and head["metric_sign"] is True


def test_b_matrix_is_reported_with_suspects():
    k = FourMomentum(1.0, 0.3, 0.5, 0.7)
    mat, rep = M.vector_b_matrix(k)
    assert "suspected typos" in rep.notes[0]
    agree = rep.checks[0].details["agreeing_entries"]
    assert agree < 16
    flagged = [c.identity for c in rep.checks[1:] if not c.details["agrees"]]
    assert "b-matrix[00,00] printed vs oracle" not in flagged
    assert len(flagged) == 16 - agree


def test_b_matrix_time_row_agrees():
    mat, rep = M.vector_b_matrix(FourMomentum(1.3, -0.2, 0.6, 0.4))
    row = [c for c in rep.checks[1:] if c.identity.startswith("b-matrix[00,")]
    assert all(c.details["agrees"] for c in row)


@given(moving)
def test_spin1_reflection_involution(k):
    r = M.reflection_matrix(k.n_hat)
    assert np.allclose(r @ r, np.eye(3))
    assert np.allclose(r, r.conj().T)


@given(moving)
def test_spin1_cross_gram_four_vector(k):
    g = M.spin1_cross_gram(k)
    assert np.allclose(g, k.m**2 * M.reflection_matrix(k.n_hat), atol=1e-9 * k.E**2)


def test_spin1_report():
    k = FourMomentum(1.0, 0.4, 0.1, -0.3)
    r, rep = M.spin1_reflection(k)
    four = rep["cross-Gram (four-vector) compared with R (reported)"].details
    three = rep["cross-Gram (three-vector) compared with R (reported)"].details
    assert four["proportional"] and four["scale_over_m2"] == pytest.approx(1.0)
    assert not three["proportional"]


def test_frequency_split_round_trip(caplog):
    ks = [FourMomentum(1.0, 0.1, 0.2, 0.3), FourMomentum(1.0, 0.1, 0.2, 0.3, -1),
          FourMomentum(1.0, 1.0, 0.0, 0.0, 1, 0.0)]
    samples = list(zip(ks, "abc"))
    with caplog.at_level("INFO"):
        split = M.frequency_split(samples)
    assert len(split.positive) == len(split.negative) == len(split.quarantined) == 1
    assert split.negative[0][0].p0 > 0 and split.negative[0][0].px == -0.1
    assert "E=0 mode" in split.diagnostics[0]
    back = split.reconstruct()
    assert sorted((k.p0, k.px, a) for k, a in back) == sorted((k.p0, k.px, a) for k, a in samples)


def test_zero_momentum_rejected():
    with pytest.raises(ValueError):
        M.dirac_cross_gram(FourMomentum(1.0))
    with pytest.raises(ValueError):
        M.spin1_reflection(FourMomentum(1.0))
