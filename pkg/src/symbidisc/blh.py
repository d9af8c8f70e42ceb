"""Intertwining solver for shift-invariant subspaces.

Given a symbol operator A and a polynomial inner multiplier Theta, find B
with (A + A*z) Theta(z) = Theta(z) (B + B*z).  Matching coefficients of
z^k gives a real-linear system in (Re B, Im B) because B and its adjoint
are not independent complex unknowns.  The companion check tests directly
whether Theta's range is invariant under the truncated symbol operator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import TruncationTooSmall
from .hardy import SymbolPoly, build_mult_op, symbol_a_plus_astar_z
from .linalg import DEFAULT_TOL, Tolerance, adj, as_matrix, opnorm, range_basis
from .numrad import numerical_radius

INNER_GRID = 128
INNER_WARN = 1e-8


@dataclass(frozen=True)
class BlhProblem:
    A: np.ndarray
    theta: SymbolPoly
    inner_residual: float

    @property
    def is_inner(self) -> bool:
        return self.inner_residual <= INNER_WARN


def make_problem(A, theta: SymbolPoly, grid: int = INNER_GRID) -> BlhProblem:
    """Bundle a symbol and multiplier; records how far Theta is from inner."""
    A = as_matrix(A)
    if A.shape[0] != A.shape[1] or A.shape[0] != theta.cod_dim:
        raise ValueError("A must be square on the codomain of theta")
    worst = 0.0
    eye = np.eye(theta.dom_dim)
    for t in 2 * np.pi * np.arange(grid) / grid:
        Th = theta.eval(np.exp(1j * t))
        worst = max(worst, opnorm(adj(Th) @ Th - eye))
    return BlhProblem(A, theta, float(worst))


@dataclass(frozen=True)
class BlhSolution:
    B: np.ndarray
    residual: float
    kernel_dim: int
    wB: float


@dataclass(frozen=True)
class NoSolution:
    best_B: np.ndarray
    residual: float


def _commutation_matrix(n: int) -> np.ndarray:
    """K with vec(X^T) = K vec(X) for n x n matrices (column-major vec)."""
    K = np.zeros((n * n, n * n))
    for i in range(n):
        for j in range(n):
            K[j * n + i, i * n + j] = 1.0
    return K


def _coefficient_residual(A, theta: SymbolPoly, B) -> float:
    d = theta.degree
    coeffs = list(theta.coeffs)
    worst = 0.0
    for k in range(d + 2):
        Tk = coeffs[k] if k <= d else np.zeros_like(coeffs[0])
        Tk1 = coeffs[k - 1] if k >= 1 else np.zeros_like(coeffs[0])
        E = A @ Tk + adj(A) @ Tk1 - Tk @ B - Tk1 @ adj(B)
        worst = max(worst, opnorm(E))
    return worst


def blh_solve(prob: BlhProblem, tol: Tolerance = DEFAULT_TOL):
    """Solve the coefficient-matching system for B.

    Returns a BlhSolution on success or a NoSolution value carrying the
    least-squares candidate and its residual.  kernel_dim counts real
    parameters of the homogeneous solution space; 0 is expected for inner
    Theta.
    """
    A, theta = prob.A, prob.theta
    d = theta.degree
    e = theta.dom_dim
    es = theta.cod_dim
    K = _commutation_matrix(e)
    eye_e = np.eye(e)

    lin_blocks, anti_blocks, rhs_blocks = [], [], []
    zero = np.zeros((es, e))
    coeffs = list(theta.coeffs)
    for k in range(d + 2):
        Tk = coeffs[k] if k <= d else zero
        Tk1 = coeffs[k - 1] if k >= 1 else zero
        lin_blocks.append(np.kron(eye_e, Tk))
        anti_blocks.append(np.kron(eye_e, Tk1) @ K)
        rhs_blocks.append((A @ Tk + adj(A) @ Tk1).reshape(-1, order="F"))

    M1 = np.vstack(lin_blocks)
    M2 = np.vstack(anti_blocks)
    r = np.concatenate(rhs_blocks)

    # M1 v + M2 conj(v) = r  as a real system in (Re v, Im v)
    top = np.hstack([(M1 + M2).real, -(M1 - M2).imag])
    bot = np.hstack([(M1 + M2).imag, (M1 - M2).real])
    R = np.vstack([top, bot])
    rhs = np.concatenate([r.real, r.imag])

    sol, _, rank, _ = np.linalg.lstsq(R, rhs, rcond=tol.rank_tol)
    kernel_dim = 2 * e * e - int(rank)
    B = (sol[: e * e] + 1j * sol[e * e :]).reshape((e, e), order="F")

    residual = _coefficient_residual(A, theta, B)
    if residual > tol.residual_tol * max(1.0, opnorm(A)):
        return NoSolution(B, float(residual))
    wB = numerical_radius(B, tol).value
    return BlhSolution(B, float(residual), kernel_dim, float(wB))


def invariance_check(A, theta: SymbolPoly, N: int, tol: Tolerance = DEFAULT_TOL):
    """Is the range of Theta invariant under the truncated symbol operator?

    The range is sampled through domain degrees <= N - deg - 1; the image
    under A + A* M_z is compared against the range through domain degrees
    <= N - deg, so no truncation edge enters the residual.
    """
    A = as_matrix(A)
    d = theta.degree
    if N < d + 1:
        raise TruncationTooSmall(f"need N >= deg + 1 = {d + 1}")
    e = theta.dom_dim
    T_theta = build_mult_op(theta, N).matrix
    dom_cols = (N - d) * e
    Q_small = range_basis(T_theta[:, :dom_cols], tol)
    Q_big = range_basis(T_theta[:, : dom_cols + e], tol)
    T = build_mult_op(symbol_a_plus_astar_z(A), N).matrix
    img = T @ Q_small
    residual = float(opnorm(img - Q_big @ (adj(Q_big) @ img)))
    return residual <= tol.residual_tol * max(1.0, opnorm(A)), residual
