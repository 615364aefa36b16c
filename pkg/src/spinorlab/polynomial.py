"""Characteristic polynomials in E by sampling a determinant at Chebyshev nodes."""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Chebyshev, Polynomial

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolynomialC:
    """Univariate complex polynomial in E, stored in a Chebyshev basis on [-L, L]."""

    cheb: Chebyshev
    half_width: float

    def __call__(self, e):
        return self.cheb(e)

    @property
    def power(self) -> Polynomial:
        return self.cheb.convert(kind=Polynomial, domain=Polynomial.domain, window=Polynomial.window)

    def degree(self, rel: float = 1e-9) -> int:
        """Highest power whose term is not negligible over [-L, L]."""
        c = self.power.coef
        mags = np.abs(c) * self.half_width ** np.arange(len(c))
        big = mags.max()
        if big == 0:
            return 0
        keep = np.nonzero(mags > rel * big)[0]
        return int(keep[-1])

    def leading(self) -> complex:
        return complex(self.power.coef[self.degree()])

    def trimmed(self) -> Polynomial:
        return Polynomial(self.power.coef[: self.degree() + 1])


def chebyshev_nodes(n: int, half_width: float) -> np.ndarray:
    k = np.arange(n)
    return half_width * np.cos(np.pi * (2 * k + 1) / (2 * n))


def det_polynomial(matrix_of_e, degree: int, scale: float, widen: float = 2.0,
                   check: float = 1e-8, attempts: int = 4) -> PolynomialC:
    """Interpolate E -> Det[matrix_of_e(E)] with ``degree + 1`` Chebyshev nodes.

    Nodes span [-widen * scale, widen * scale].  The fit is validated at three
    extra nodes and re-sampled on a rescaled interval if it disagrees.
    """
    if scale <= 0:
        scale = 1.0
    half = widen * scale
    last = None
    for _ in range(attempts):
        x = chebyshev_nodes(degree + 1, half)
        y = np.array([np.linalg.det(matrix_of_e(e)) for e in x], dtype=complex)
        cheb = Chebyshev.fit(x, y, degree, domain=[-half, half])
        probe = half * np.array([-0.731, 0.113, 0.947])
        exact = np.array([np.linalg.det(matrix_of_e(e)) for e in probe], dtype=complex)
        err = np.max(np.abs(cheb(probe) - exact)) / max(np.max(np.abs(y)), 1e-300)
        poly = PolynomialC(cheb, half)
        if err <= check:
            return poly
        log.info("det_polynomial: interpolation error %.2e, re-sampling", err)
        last = poly
        half *= 1.5
    return last


def cluster_roots(roots, tol: float) -> list[tuple[complex, int]]:
    """Group numerically split multiple roots; returns (centroid, multiplicity)."""
    remaining = list(np.asarray(roots, dtype=complex))
    out = []
    while remaining:
        r = remaining.pop(0)
        group = [r]
        changed = True
        while changed:
            changed = False
            for s in list(remaining):
                if min(abs(s - g) for g in group) <= tol:
                    group.append(s)
                    remaining.remove(s)
                    changed = True
        out.append((complex(np.mean(group)), len(group)))
    out.sort(key=lambda rm: (round(rm[0].real, 9), round(rm[0].imag, 9)))
    return out


def polish(poly: Polynomial, root: complex, multiplicity: int, steps: int = 20) -> complex:
    """Newton iteration on the (k-1)th derivative, where a k-fold root is simple."""
    d = poly.deriv(multiplicity - 1) if multiplicity > 1 else poly
    dd = d.deriv()
    z = complex(root)
    for _ in range(steps):
        den = dd(z)
        if den == 0:
            break
        step = d(z) / den
        z -= step
        if abs(step) <= 1e-16 * max(1.0, abs(z)):
            break
    return z


def _merge_multiple(groups, half_width: float, noise: float) -> list[tuple[complex, int]]:
    """Merge clusters that form one k-fold root.

    A k-fold root perturbed by relative noise d splits into a ring of radius
    ~ L d^(1/k), so the acceptable spread grows with the merged multiplicity.
    Each pass grows a neighbourhood around every cluster and merges the one
    with the largest admissible multiplicity.
    """
    groups = [[c] for c in groups]

    def stats(members):
        zs = [z for g in members for z, _ in g]
        ws = [w for g in members for _, w in g]
        centre = np.average(zs, weights=ws)
        return sum(ws), max(abs(z - centre) for z in zs)

    while len(groups) > 1:
        best = None
        for i, g in enumerate(groups):
            c0 = g[0][0]
            order = sorted((j for j in range(len(groups)) if j != i), key=lambda j: abs(groups[j][0][0] - c0))
            for n in range(1, len(order) + 1):
                pick = [i] + order[:n]
                k, spread = stats([groups[j] for j in pick])
                if spread <= half_width * noise ** (1.0 / k) and (best is None or (k, -spread) > best[:2]):
                    best = (k, -spread, pick)
        if best is None:
            break
        pick = set(best[2])
        groups = [[z for j in sorted(pick) for z in groups[j]]] + [g for j, g in enumerate(groups) if j not in pick]
    out = []
    for g in groups:
        out.append((complex(np.average([z for z, _ in g], weights=[w for _, w in g])), sum(w for _, w in g)))
    return out


def multiset_roots(p: PolynomialC, cluster_tol: float, noise: float = 1e-10) -> list[tuple[complex, int]]:
    """Roots with multiplicities of the trimmed polynomial, clustered and polished."""
    trimmed = p.trimmed()
    if trimmed.degree() < 1:
        return []
    raw = trimmed.roots()
    groups = _merge_multiple(cluster_roots(raw, cluster_tol), p.half_width, noise)
    groups.sort(key=lambda rm: (round(rm[0].real, 9), round(rm[0].imag, 9)))
    return [(polish(trimmed, r, k), k) for r, k in groups]
