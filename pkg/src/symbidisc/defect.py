"""Defect operators, characteristic function, and the truncated model space.

For a contraction P the defect operators are D_P = (I - P*P)^(1/2) and
D_P* = (I - PP*)^(1/2); the characteristic function is

    Theta(z) = [-P + z D_P* (I - z P*)^(-1) D_P]  restricted to ran D_P,

stored in orthonormal defect-space bases.  A finite c.n.u. matrix has
spectral radius < 1, so Theta is inner, the boundary defect vanishes, and
the model space reduces to the orthogonal complement of Theta * H^2 inside
the truncated H^2 over the D_P* defect space.  The model basis is obtained
by orthonormalizing the columns of the minimal-dilation embedding

    h  ->  sum_k z^k (D_P* P*^k h),

whose range spans that complement up to the geometric truncation tail.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    NonConvergence,
    NotAContraction,
    NotCnu,
    ResolventSingular,
    TruncationTooSmall,
)
from .hardy import SymbolPoly
from .linalg import DEFAULT_TOL, Tolerance, adj, as_matrix, opnorm, psd_sqrt, range_basis

CNU_MARGIN = 1e-8
TAIL_TARGET = 1e-10
X_LIMIT_MAX_ITER = 20000


@dataclass(frozen=True)
class DefectData:
    D_P: np.ndarray
    D_Pstar: np.ndarray
    Q_dP: np.ndarray
    Q_dPstar: np.ndarray

    @property
    def rank_dP(self) -> int:
        return self.Q_dP.shape[1]

    @property
    def rank_dPstar(self) -> int:
        return self.Q_dPstar.shape[1]


@dataclass(frozen=True)
class CharFn:
    """Taylor data of the characteristic function in defect bases."""

    taylor: SymbolPoly
    source_P: np.ndarray
    degree_used: int
    defect: DefectData


@dataclass(frozen=True)
class ModelSpace:
    """Orthonormal basis of the truncated model space of a c.n.u. matrix."""

    basis: np.ndarray
    N: int
    delta_norm: float
    trunc_error: float

    @property
    def dim(self) -> int:
        return self.basis.shape[1]


def contraction_check(P: np.ndarray, tol: Tolerance) -> None:
    if opnorm(P) > 1 + tol.rank_tol * 10:
        raise NotAContraction(f"||P|| = {opnorm(P):.6f} exceeds 1")


def spectral_radius(P) -> float:
    P = as_matrix(P)
    if P.size == 0:
        return 0.0
    return float(np.max(np.abs(np.linalg.eigvals(P))))


def cnu_check(P: np.ndarray) -> None:
    """Finite c.n.u. contraction <=> spectral radius < 1."""
    if spectral_radius(P) >= 1 - CNU_MARGIN:
        raise NotCnu("P has a (numerically) unimodular eigenvalue; split the unitary part first")


def defect_data(P, tol: Tolerance = DEFAULT_TOL) -> DefectData:
    P = as_matrix(P)
    contraction_check(P, tol)
    n = P.shape[0]
    eye = np.eye(n)
    D_P = psd_sqrt(eye - adj(P) @ P, tol)
    D_Ps = psd_sqrt(eye - P @ adj(P), tol)
    return DefectData(D_P, D_Ps, range_basis(D_P, tol), range_basis(D_Ps, tol))


def theta_taylor(P, K: int, tol: Tolerance = DEFAULT_TOL) -> CharFn:
    """First K+1 Taylor coefficients of the characteristic function.

    C_0 = -Q* P Q restricted to the defect bases; C_k for k >= 1 comes from
    the Neumann expansion of the resolvent.
    """
    P = as_matrix(P)
    dd = defect_data(P, tol)
    cnu_check(P)
    Qp, Qs = dd.Q_dP, dd.Q_dPstar
    coeffs = [-adj(Qs) @ P @ Qp]
    left = adj(Qs) @ dd.D_Pstar
    right = dd.D_P @ Qp
    power = np.eye(P.shape[0])
    for _ in range(1, K + 1):
        coeffs.append(left @ power @ right)
        power = adj(P) @ power
    return CharFn(SymbolPoly(coeffs), P, K, dd)


def theta_eval(charfn: CharFn, z: complex) -> np.ndarray:
    """Evaluate Theta(z) directly through the resolvent (not the series)."""
    P = charfn.source_P
    dd = charfn.defect
    n = P.shape[0]
    M = np.eye(n) - z * adj(P)
    if np.linalg.cond(M) > 1e14:
        raise ResolventSingular(f"I - z P* is singular at z = {z}")
    core = -P + z * dd.D_Pstar @ np.linalg.solve(M, dd.D_P)
    return adj(dd.Q_dPstar) @ core @ dd.Q_dP


def delta_eval(charfn: CharFn, t: float, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Boundary defect [I - Theta(e^it)* Theta(e^it)]^(1/2) on the D_P basis."""
    th = theta_eval(charfn, np.exp(1j * t))
    return psd_sqrt(np.eye(th.shape[1]) - adj(th) @ th, tol)


def x_limit(P, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Square root of the strong limit of P^m P*^m (zero for c.n.u. matrices)."""
    P = as_matrix(P)
    contraction_check(P, tol)
    M = np.eye(P.shape[0], dtype=complex)
    for _ in range(X_LIMIT_MAX_ITER):
        nxt = P @ M @ adj(P)
        delta = opnorm(nxt - M)
        M = nxt
        if delta <= tol.convergence_tol:
            return psd_sqrt(0.5 * (M + adj(M)), tol)
    raise NonConvergence(
        f"power iteration did not settle after {X_LIMIT_MAX_ITER} steps (last delta {delta:.3e})"
    )


def default_truncation(P, target: float = TAIL_TARGET) -> int:
    """Smallest N >= 32 with spectral_radius(P)^(N+1) below the tail target."""
    rho = spectral_radius(as_matrix(P))
    if rho <= 0:
        return 32
    need = int(np.ceil(np.log(target) / np.log(rho))) - 1 if rho < 1 else np.inf
    return max(32, int(need)) if np.isfinite(need) else 32


def pi_nf_matrix(P, N: int, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Matrix of the truncated minimal-dilation embedding.

    Degree-k row block is Q_dPstar* D_P* P*^k; columns are the embeddings
    of the standard basis of the source space.
    """
    P = as_matrix(P)
    dd = defect_data(P, tol)
    cnu_check(P)
    n = P.shape[0]
    rs = dd.rank_dPstar
    top = adj(dd.Q_dPstar) @ dd.D_Pstar
    Pi = np.zeros(((N + 1) * rs, n), dtype=complex)
    power = np.eye(n)
    for k in range(N + 1):
        Pi[k * rs : (k + 1) * rs, :] = top @ power
        power = power @ adj(P)
    return Pi


def pi_nf_embed(P, N: int, h, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Embed a vector into the truncated model-space ambient."""
    h = np.asarray(h, dtype=complex).ravel()
    return pi_nf_matrix(P, N, tol) @ h


def truncation_tail(P, N: int) -> float:
    """||P^(N+1)||, the norm bound on everything the truncation discards."""
    P = as_matrix(P)
    if P.size == 0:
        return 0.0
    return opnorm(np.linalg.matrix_power(P, N + 1))


def build_model_space(
    P,
    N: int,
    tol: Tolerance = DEFAULT_TOL,
    delta_grid: int = 256,
) -> ModelSpace:
    """Orthonormal basis of the truncated model space.

    The boundary defect is sampled on a t-grid and recorded; it must vanish
    for matrix inputs (class C_00), which is what licenses dropping the
    boundary summand of the ambient space.
    """
    P = as_matrix(P)
    rho = spectral_radius(P)
    cnu_check(P)
    if rho > 0 and rho ** (N + 1) > 1e-8:
        raise TruncationTooSmall(
            f"spectral radius {rho:.4f} needs N > {default_truncation(P)} (got {N})"
        )
    cf = theta_taylor(P, 0, tol)
    ts = 2 * np.pi * np.arange(delta_grid) / delta_grid
    delta_norm = max(opnorm(delta_eval(cf, t, tol)) for t in ts) if cf.defect.rank_dP else 0.0
    Pi = pi_nf_matrix(P, N, tol)
    basis = range_basis(Pi, tol)
    return ModelSpace(basis, N, float(delta_norm), truncation_tail(P, N))
