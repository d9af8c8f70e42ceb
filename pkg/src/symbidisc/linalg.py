"""Dense complex linear-algebra substrate.

Positive square roots, orthonormal range bases with a rank tolerance, and
minimal-norm sandwiched least-squares solves.  Everything downstream (defect
operators, model spaces, dilations) goes through these three primitives so
the rank/phase conventions are fixed in one place.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IndefiniteInput, NotHermitian


@dataclass(frozen=True)
class Tolerance:
    """Numerical tolerances used throughout the package.

    rank_tol is relative to the largest singular value; residual_tol and
    convergence_tol are absolute up to a max(1, scale) factor.
    """

    rank_tol: float = 1e-10
    residual_tol: float = 1e-8
    convergence_tol: float = 1e-12

    def __post_init__(self):
        if not (self.rank_tol > 0 and self.residual_tol > 0 and self.convergence_tol > 0):
            raise ValueError("tolerances must be strictly positive")
        if self.rank_tol >= 1:
            raise ValueError("rank_tol must be < 1")


DEFAULT_TOL = Tolerance()


def as_matrix(M) -> np.ndarray:
    """Coerce input to a 2-d complex ndarray and reject non-finite entries."""
    A = np.atleast_2d(np.asarray(M, dtype=complex))
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    return A


def opnorm(M) -> float:
    """Spectral (operator) norm; 0 for empty matrices."""
    M = np.atleast_2d(np.asarray(M))
    if M.size == 0:
        return 0.0
    return float(np.linalg.norm(M, 2))


def adj(M: np.ndarray) -> np.ndarray:
    return M.conj().T


def psd_sqrt(M, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Hermitian PSD square root via eigendecomposition.

    Eigenvalues within rank_tol*max(1, ||M||) of zero are treated as exact
    zeros (this keeps defect operators of unitaries identically zero instead
    of noise-sized); anything below -rank_tol raises IndefiniteInput.
    """
    M = as_matrix(M)
    if M.size == 0:
        return M.copy()
    scale = opnorm(M)
    if opnorm(M - adj(M)) > tol.rank_tol * max(1.0, scale) * 10:
        raise NotHermitian("matrix is not hermitian within tolerance")
    H = 0.5 * (M + adj(M))
    w, V = np.linalg.eigh(H)
    cut = tol.rank_tol * max(1.0, scale)
    if np.any(w < -cut):
        raise IndefiniteInput(f"eigenvalue {w.min():.3e} below -rank_tol*||M||")
    w = np.where(w < cut, 0.0, w)
    R = (V * np.sqrt(w)) @ adj(V)
    return 0.5 * (R + adj(R))


def _fix_phases(Q: np.ndarray) -> np.ndarray:
    """Make the largest-magnitude entry of each column real and positive."""
    Q = Q.copy()
    for j in range(Q.shape[1]):
        k = int(np.argmax(np.abs(Q[:, j])))
        a = Q[k, j]
        if abs(a) > 0:
            Q[:, j] *= np.conj(a) / abs(a)
    return Q


def range_basis(M, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of the column space of M.

    Singular values <= rank_tol * sigma_max are treated as zero.  The zero
    matrix yields a basis with 0 columns.  Columns follow a deterministic
    phase convention (largest entry real positive).
    """
    M = as_matrix(M)
    if M.size == 0 or opnorm(M) == 0.0:
        return np.zeros((M.shape[0], 0), dtype=complex)
    U, s, _ = np.linalg.svd(M, full_matrices=False)
    r = int(np.sum(s > tol.rank_tol * s[0]))
    return _fix_phases(U[:, :r])


def null_basis(M, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of the (numerical) null space of M."""
    M = as_matrix(M)
    if M.size == 0:
        return np.eye(M.shape[1], dtype=complex)
    U, s, Vh = np.linalg.svd(M)
    smax = s[0] if len(s) else 0.0
    r = int(np.sum(s > tol.rank_tol * smax)) if smax > 0 else 0
    return _fix_phases(adj(Vh)[:, r:])


def sandwich_solve(L, R, C, tol: Tolerance = DEFAULT_TOL):
    """Minimal-Frobenius-norm solution X of L X R = C.

    Returns (X, residual) where residual = ||L X R - C||_F.  Inconsistent
    systems are not an error; the caller interprets the residual.
    """
    L, R, C = as_matrix(L), as_matrix(R), as_matrix(C)
    Lp = np.linalg.pinv(L, rcond=tol.rank_tol)
    Rp = np.linalg.pinv(R, rcond=tol.rank_tol)
    X = Lp @ C @ Rp
    residual = float(np.linalg.norm(L @ X @ R - C))
    return X, residual
