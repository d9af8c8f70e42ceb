"""Scalar geometry of the symmetrized bidisc.

The closed symmetrized bidisc is the image of the closed bidisc under
(z1, z2) -> (z1 + z2, z1 * z2).  Membership is decided by a root test on
t^2 - s*t + p; the beta-characterization s = beta + p*conj(beta) with
|beta| <= 1 is kept as an independent cross-check.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

DEFAULT_BOUNDARY_TOL = 1e-9


@dataclass(frozen=True)
class GammaPoint:
    s: complex
    p: complex


@dataclass(frozen=True)
class BetaSolution:
    beta: complex
    exact: bool
    residual: float


def symmetrize(z1: complex, z2: complex) -> GammaPoint:
    return GammaPoint(z1 + z2, z1 * z2)


def _quadratic_roots(s: complex, p: complex):
    """Roots of t^2 - s t + p with a cancellation-stable branch choice."""
    d = cmath.sqrt(s * s - 4 * p)
    # pick the sign that avoids subtractive cancellation in s +/- d
    if abs(s + d) >= abs(s - d):
        big = (s + d) / 2
    else:
        big = (s - d) / 2
    if abs(big) == 0.0:
        return 0.0 + 0.0j, 0.0 + 0.0j
    return big, p / big


def in_gamma(pt: GammaPoint, tol: float = DEFAULT_BOUNDARY_TOL) -> bool:
    """True iff both roots of t^2 - s t + p lie in the closed unit disk."""
    r1, r2 = _quadratic_roots(pt.s, pt.p)
    return abs(r1) <= 1 + tol and abs(r2) <= 1 + tol


def beta_solve(pt: GammaPoint) -> BetaSolution:
    """Solve s = beta + p * conj(beta) for beta.

    Writing beta = x + iy the equation is a real 2x2 linear system with
    determinant 1 - |p|^2.  On the degenerate boundary |p| = 1 the
    minimal-norm least-squares solution is returned and `exact` reports
    whether the system was consistent.
    """
    s, p = complex(pt.s), complex(pt.p)
    M = np.array(
        [
            [1.0 + p.real, p.imag],
            [p.imag, 1.0 - p.real],
        ]
    )
    rhs = np.array([s.real, s.imag])
    sol, *_ = np.linalg.lstsq(M, rhs, rcond=1e-12)
    beta = complex(sol[0], sol[1])
    residual = abs(beta + p * beta.conjugate() - s)
    exact = residual <= 1e-9 * max(1.0, abs(s))
    return BetaSolution(beta, exact, residual)


def boundary_sample(n: int) -> list:
    """n^2 distinguished-boundary points from the uniform n x n torus grid.

    Every returned point has |p| = 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    angles = 2 * np.pi * np.arange(n) / n
    pts = []
    for tj in angles:
        z1 = cmath.exp(1j * tj)
        for tk in angles:
            z2 = cmath.exp(1j * tk)
            pts.append(symmetrize(z1, z2))
    return pts


def boundary_grid(n: int):
    """Vectorized (s, p) arrays for the n x n boundary grid."""
    z = np.exp(2j * np.pi * np.arange(n) / n)
    z1, z2 = np.meshgrid(z, z, indexing="ij")
    return (z1 + z2).ravel(), (z1 * z2).ravel()
