"""Truncated vector-valued Hardy space machinery.

Operators on polynomials of degree 0..N with values in C^b are stored as
block matrices in the degree-major basis (degree first, coordinate within
block second).  Multiplication by an analytic matrix polynomial becomes a
lower-block-triangular block-Toeplitz matrix; identities that hold on the
infinite space survive truncation on an interior degree window.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, TruncationTooSmall
from .linalg import adj, as_matrix
from .pair import OperatorPair, make_pair


@dataclass(frozen=True)
class SymbolPoly:
    """Matrix polynomial sum_k C_k z^k given by its coefficient list."""

    coeffs: tuple

    def __init__(self, coeffs: Sequence):
        mats = tuple(as_matrix(c) for c in coeffs)
        if not mats:
            raise ValueError("at least one coefficient required")
        shape = mats[0].shape
        if any(m.shape != shape for m in mats):
            raise DimensionMismatch("all coefficients must share dimensions")
        object.__setattr__(self, "coeffs", mats)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def cod_dim(self) -> int:
        return self.coeffs[0].shape[0]

    @property
    def dom_dim(self) -> int:
        return self.coeffs[0].shape[1]

    def eval(self, z: complex) -> np.ndarray:
        out = np.zeros_like(self.coeffs[0])
        for c in reversed(self.coeffs):
            out = out * z + c
        return out


def symbol_a_plus_astar_z(A) -> SymbolPoly:
    """The degree-one symbol A + A* z of a pure model pair."""
    A = as_matrix(A)
    return SymbolPoly([A, adj(A)])


@dataclass(frozen=True)
class TruncatedOp:
    """Block matrix on a truncated Hardy/Fourier space.

    interior_hi is the largest degree on which truncated identities are
    exact.  block_rows/block_cols may differ for rectangular symbols; for
    square symbols block_size is the common value.
    """

    matrix: np.ndarray
    block_rows: int
    block_cols: int
    degree_lo: int
    degree_hi: int
    interior_hi: int

    @property
    def block_size(self) -> int:
        if self.block_rows != self.block_cols:
            raise DimensionMismatch("rectangular blocks have no single block_size")
        return self.block_rows

    @property
    def n_degrees(self) -> int:
        return self.degree_hi - self.degree_lo + 1


def build_mult_op(phi: SymbolPoly, N: int) -> TruncatedOp:
    """Block-Toeplitz multiplication operator for an analytic symbol.

    Acts on degrees 0..N with the coefficient C_k on the k-th block
    subdiagonal; interior_hi = N - deg(phi).
    """
    d = phi.degree
    if N < d:
        raise TruncationTooSmall(f"need N >= deg(phi) = {d}, got {N}")
    b_r, b_c = phi.cod_dim, phi.dom_dim
    M = np.zeros(((N + 1) * b_r, (N + 1) * b_c), dtype=complex)
    for k, C in enumerate(phi.coeffs):
        for j in range(N + 1 - k):
            i = j + k
            M[i * b_r : (i + 1) * b_r, j * b_c : (j + 1) * b_c] = C
    return TruncatedOp(M, b_r, b_c, 0, N, N - d)


def shift_op(block_size: int, N: int) -> TruncatedOp:
    """Truncated multiplication by z on H^2 tensor C^block_size."""
    zero = np.zeros((block_size, block_size))
    eye = np.eye(block_size)
    return build_mult_op(SymbolPoly([zero, eye]), N)


def gamma_isometry_model(A, N: int) -> OperatorPair:
    """Truncated pure model pair (M_{A + A*z}, M_z) on degrees 0..N."""
    A = as_matrix(A)
    if A.shape[0] != A.shape[1]:
        raise DimensionMismatch("symbol must be square")
    if N < 1:
        raise TruncationTooSmall("need N >= 1")
    b = A.shape[0]
    S = build_mult_op(symbol_a_plus_astar_z(A), N)
    P = shift_op(b, N)
    return make_pair(S.matrix, P.matrix, interior_hi=N - 1, block_size=b)


def compress(op, basis) -> np.ndarray:
    """Compression Q* op Q onto the span of orthonormal columns Q."""
    M = op.matrix if isinstance(op, TruncatedOp) else as_matrix(op)
    Q = as_matrix(basis)
    if M.shape[1] != Q.shape[0]:
        raise DimensionMismatch(
            f"operator dimension {M.shape[1]} does not match basis rows {Q.shape[0]}"
        )
    return adj(Q) @ M @ Q


def pc_tensor(A, N: int) -> np.ndarray:
    """A acting on the constant functions: A in the (0, 0) block, 0 elsewhere."""
    A = as_matrix(A)
    b = A.shape[0]
    M = np.zeros(((N + 1) * b, (N + 1) * b), dtype=complex)
    M[:b, :b] = A
    return M


def block_of(M: np.ndarray, block_rows: int, block_cols: int, i: int, j: int) -> np.ndarray:
    return M[i * block_rows : (i + 1) * block_rows, j * block_cols : (j + 1) * block_cols]
