from __future__ import annotations

import numpy as np
from hypothesis import settings
from hypothesis import strategies as st

from spinorlab.algebra import FourMomentum

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")

masses = st.floats(0.1, 10.0)
components = st.floats(-30.0, 30.0)


@st.composite
def momenta(draw, nonzero: bool = False, max_ratio: float = 10.0):
    m = draw(masses)
    v = np.array([draw(st.floats(-1.0, 1.0)) for _ in range(3)]) * max_ratio * m / np.sqrt(3)
    if nonzero and np.linalg.norm(v) < 1e-3 * m:
        v = v + np.array([0.0, 0.0, 0.1 * m])
    return FourMomentum(m, *map(float, v))


def oracle_gamma_chiral():
    """Written out by hand, independently of the library tables."""
    z, i2 = np.zeros((2, 2)), np.eye(2)
    s = [np.array([[0, 1], [1, 0]]), np.array([[0, -1j], [1j, 0]]), np.array([[1, 0], [0, -1]])]
    g = [np.block([[z, i2], [i2, z]])] + [np.block([[z, -si], [si, z]]) for si in s]
    return [x.astype(complex) for x in g]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
