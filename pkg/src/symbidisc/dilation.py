"""Explicit dilations and functional models.

Schaffer pair: on the space H + truncated H^2 over the D_P defect space,

    V = [[P, 0], [row(D_P), M_z]],   W = [[S, 0], [row(A* D_P), A + A* M_z]],

with the embedding h -> h + 0 intertwining the adjoints exactly.  The
model builder compresses (M_{A + A*z}, M_z) to the truncated model space
and certifies unitary equivalence back to the input pair; the compressed
scalar X = P_Q (I tensor A)|_Q realizes S = X + P X*.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .classify import (
    GAMMA_CONTRACTION,
    GAMMA_ISOMETRY,
    GAMMA_UNITARY,
    find_unitary_intertwiner,
    is_gamma_contraction,
)
from .defect import ModelSpace, build_model_space, defect_data, pi_nf_matrix
from .errors import (
    ClassificationFailed,
    NotADilation,
    NotCommuting,
    NotUnitary,
    ResidualTooLarge,
)
from .hardy import build_mult_op, compress, shift_op, symbol_a_plus_astar_z
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    adj,
    as_matrix,
    opnorm,
    range_basis,
    sandwich_solve,
)
from .numrad import numerical_radius
from .pair import OperatorPair, make_pair

_PASSING = (GAMMA_CONTRACTION, GAMMA_ISOMETRY, GAMMA_UNITARY)


@dataclass(frozen=True)
class SchafferPair:
    V: np.ndarray
    W: np.ndarray
    embed: np.ndarray
    A_used: np.ndarray
    window: np.ndarray
    N: int

    def as_pair(self) -> OperatorPair:
        return make_pair(self.W, self.V, window=self.window)


@dataclass(frozen=True)
class NfAyModel:
    model_space: ModelSpace
    symbol_A: np.ndarray
    S_model: np.ndarray
    P_model: np.ndarray
    residual_S: float
    residual_P: float
    intertwiner: Optional[np.ndarray]

    @property
    def tolerance_bound(self) -> float:
        return max(1e-8, 10 * self.model_space.trunc_error)


@dataclass(frozen=True)
class CompressedScalar:
    X: np.ndarray
    source_A: np.ndarray
    decompressed_wr: float


def _require_gamma(pair: OperatorPair, tol: Tolerance):
    report = is_gamma_contraction(pair, tol)
    if report.kind not in _PASSING:
        raise ClassificationFailed(f"pair classified {report.kind}: {report.failed()}")
    return report


def schaffer_build(pair: OperatorPair, N: int, tol: Tolerance = DEFAULT_TOL) -> SchafferPair:
    """Explicit isometric dilation pair (W, V) on H + truncated Hardy space.

    The adjoint intertwinings with the embedding are exact: no truncation
    enters the embedded columns.
    """
    report = _require_gamma(pair, tol)
    S, P = pair.S, pair.P
    n = S.shape[0]
    F = report.fundamental_op
    dd = defect_data(P, tol)
    r = dd.rank_dP
    hardy_dim = (N + 1) * r
    dim = n + hardy_dim

    row = adj(dd.Q_dP) @ dd.D_P  # h -> D_P h in defect-basis coordinates

    V = np.zeros((dim, dim), dtype=complex)
    V[:n, :n] = P
    if r:
        V[n : n + r, :n] = row
        V[n:, n:] = shift_op(r, N).matrix

    W = np.zeros((dim, dim), dtype=complex)
    W[:n, :n] = S
    if r:
        W[n : n + r, :n] = adj(F) @ row
        W[n:, n:] = build_mult_op(symbol_a_plus_astar_z(F), N).matrix

    embed = np.zeros((dim, n), dtype=complex)
    embed[:n, :n] = np.eye(n)

    window = np.concatenate(
        [np.ones(n, dtype=bool), (np.arange(hardy_dim) // max(r, 1)) <= N - 1]
    )
    return SchafferPair(V, W, embed, F, window, N)


def nf_ay_build(pair: OperatorPair, N: int, tol: Tolerance = DEFAULT_TOL) -> NfAyModel:
    """Functional model of a c.n.u. pair on the truncated model space.

    The symbol is extracted from S* - S P* sandwiched between the D_P*
    defect operators; the model operators are compressions of the pure
    model pair, certified against the input by an explicit unitary.
    """
    _require_gamma(pair, tol)
    S, P = pair.S, pair.P
    dd = defect_data(P, tol)
    G, _ = sandwich_solve(dd.D_Pstar, dd.D_Pstar, adj(S) - S @ adj(P), tol)
    symbol_A = adj(adj(dd.Q_dPstar) @ G @ dd.Q_dPstar)

    model = build_model_space(P, N, tol)
    rs = dd.rank_dPstar
    S_model = compress(build_mult_op(symbol_a_plus_astar_z(symbol_A), N), model.basis)
    P_model = compress(shift_op(rs, N), model.basis)

    U, _ = find_unitary_intertwiner([S_model, P_model], [S, P], tol)
    if U is None:
        res_S = res_P = np.inf
    else:
        res_S = opnorm(U @ S_model - S @ U)
        res_P = opnorm(U @ P_model - P @ U)
    return NfAyModel(model, symbol_A, S_model, P_model, float(res_S), float(res_P), U)


def compressed_scalar(model: NfAyModel) -> CompressedScalar:
    """Compression of the constant symbol operator; satisfies S = X + P X*."""
    N = model.model_space.N
    big = np.kron(np.eye(N + 1), model.symbol_A)
    X = compress(big, model.model_space.basis)
    defect = opnorm(model.S_model - (X + model.P_model @ adj(X)))
    if defect > model.tolerance_bound:
        raise ResidualTooLarge(
            f"S = X + P X* fails by {defect:.3e} (bound {model.tolerance_bound:.3e})"
        )
    wr = numerical_radius(model.symbol_A).value
    return CompressedScalar(X, model.symbol_A, float(wr))


def gamma_unitary_synth(U1, U2, tol: Tolerance = DEFAULT_TOL) -> OperatorPair:
    """Pair (U1 + U2, U1 U2) from commuting unitaries; always classifies unitary."""
    U1, U2 = as_matrix(U1), as_matrix(U2)
    eye = np.eye(U1.shape[0])
    t = tol.residual_tol
    for name, U in (("U1", U1), ("U2", U2)):
        if opnorm(adj(U) @ U - eye) > t or opnorm(U @ adj(U) - eye) > t:
            raise NotUnitary(f"{name} is not unitary within tolerance")
    if opnorm(U1 @ U2 - U2 @ U1) > t:
        raise NotCommuting("U1 and U2 do not commute")
    return make_pair(U1 + U2, U1 @ U2)


def factorization_check(
    pair: OperatorPair,
    other_dilation,
    N: int,
    tol: Tolerance = DEFAULT_TOL,
    depth: int = 8,
):
    """Factor another isometric dilation through the minimal one.

    The factor map is pinned down on the reachable span by sending the
    shifted embedding stages of the minimal dilation to the corresponding
    stages of the other dilation.  Returns (Phi, isometry_residual,
    shift_intertwining_residual); the latter realizes the block-structure
    claim of the factorization at finite truncation.
    """
    V, embed = other_dilation
    V, embed = as_matrix(V), as_matrix(embed)
    P = pair.P
    n = P.shape[0]

    d_res = opnorm(adj(V) @ embed - embed @ adj(P))
    if d_res > max(tol.residual_tol, 100 * tol.convergence_tol) * 100:
        raise NotADilation(f"adjoint intertwining fails by {d_res:.3e}")

    Pi = pi_nf_matrix(P, N, tol)
    rs = Pi.shape[0] // (N + 1)
    Mz = shift_op(rs, N).matrix

    depth = min(depth, N - 1)
    G_stages, T_stages = [Pi], [embed]
    for _ in range(depth):
        G_stages.append(Mz @ G_stages[-1])
        T_stages.append(V @ T_stages[-1])
    G = np.hstack(G_stages)
    T = np.hstack(T_stages)

    Phi = T @ np.linalg.pinv(G, rcond=tol.rank_tol)

    Qg = range_basis(G, tol)
    PhiQ = Phi @ Qg
    iso_res = opnorm(adj(PhiQ) @ PhiQ - np.eye(Qg.shape[1]))

    Qg1 = range_basis(np.hstack(G_stages[:-1]), tol)
    block_res = opnorm(V @ Phi @ Qg1 - Phi @ Mz @ Qg1)
    return Phi, float(iso_res), float(block_res)
