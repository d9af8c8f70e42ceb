"""Commuting operator pair carrier."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .linalg import as_matrix


def restrict(M: np.ndarray, mask: Optional[np.ndarray]) -> np.ndarray:
    """Restrict a matrix to the rows and columns selected by a boolean mask."""
    if mask is None:
        return M
    return M[np.ix_(mask, mask)]


@dataclass(frozen=True)
class OperatorPair:
    """A commuting pair (S, P) with cached commutator norm.

    For pairs living on a truncated Hardy space, `block_size` and
    `interior_hi` describe the degree-major block layout and the largest
    degree on which operator identities are exact; `window` is the
    corresponding boolean coordinate mask.  Plain matrix pairs leave all
    three unset.
    """

    S: np.ndarray
    P: np.ndarray
    commutator_norm: float
    interior_hi: Optional[int] = None
    block_size: Optional[int] = None
    window: Optional[np.ndarray] = None

    @property
    def dim(self) -> int:
        return self.S.shape[0]


def degree_mask(dim: int, block_size: int, degree_hi: int) -> np.ndarray:
    """Boolean mask keeping coordinates of degree <= degree_hi."""
    degs = np.arange(dim) // block_size
    return degs <= degree_hi


def make_pair(
    S,
    P,
    interior_hi: Optional[int] = None,
    block_size: Optional[int] = None,
    window: Optional[np.ndarray] = None,
) -> OperatorPair:
    S, P = as_matrix(S), as_matrix(P)
    if S.shape != P.shape or S.shape[0] != S.shape[1]:
        raise ValueError("S and P must be square matrices of the same size")
    if window is None and interior_hi is not None and block_size is not None:
        window = degree_mask(S.shape[0], block_size, interior_hi)
    comm = restrict(S @ P - P @ S, window)
    norm = float(np.linalg.norm(comm, 2)) if comm.size else 0.0
    return OperatorPair(S, P, norm, interior_hi, block_size, window)
