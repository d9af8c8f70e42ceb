"""Classification of commuting pairs.

The hierarchy runs: P unitary with S = S*P and ||S|| <= 2 (the unitary
case); P isometric with the same algebra (the isometric case); and the
general case decided through the fundamental-operator equation

    S - S*P = D_P A D_P,   w(A) <= 1,

solved as a sandwiched least-squares problem on the defect space.  A von
Neumann sampling check and a joint unitary-equivalence test round out the
toolbox.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .defect import defect_data
from .errors import DimensionMismatch, NotCommuting, NotPureModelForm
from .gamma_point import boundary_grid
from .hardy import block_of
from .linalg import DEFAULT_TOL, Tolerance, adj, as_matrix, opnorm, sandwich_solve
from .numrad import WR_SLACK, numerical_radius
from .pair import OperatorPair, restrict

GAMMA_UNITARY = "GammaUnitary"
GAMMA_ISOMETRY = "GammaIsometry"
GAMMA_CONTRACTION = "GammaContraction"
NOT_GAMMA = "NotGamma"
INCONCLUSIVE = "Inconclusive"

WORD_BUDGET = 200_000


@dataclass
class ClassificationReport:
    kind: str
    fundamental_op: Optional[np.ndarray] = None
    fundamental_residual: float = np.inf
    wA: float = np.inf
    checks: list = field(default_factory=list)

    def add(self, name: str, ok: bool, residual: float):
        self.checks.append((name, bool(ok), float(residual)))

    def failed(self):
        return [c for c in self.checks if not c[1]]


def _commutator_gate(pair: OperatorPair, tol: Tolerance) -> None:
    scale = max(1.0, opnorm(pair.S) * opnorm(pair.P))
    if pair.commutator_norm > tol.residual_tol * scale:
        raise NotCommuting(
            f"commutator norm {pair.commutator_norm:.3e} exceeds tolerance"
        )


def is_gamma_unitary(pair: OperatorPair, tol: Tolerance = DEFAULT_TOL):
    _commutator_gate(pair, tol)
    S, P, w = pair.S, pair.P, pair.window
    eye = np.eye(P.shape[0])
    rep = ClassificationReport(kind=INCONCLUSIVE)
    r_iso = opnorm(restrict(adj(P) @ P - eye, w))
    r_coiso = opnorm(restrict(P @ adj(P) - eye, w))
    r_sym = opnorm(restrict(S - adj(S) @ P, w))
    ns = opnorm(S)
    t = tol.residual_tol
    rep.add("P isometric", r_iso <= t, r_iso)
    rep.add("P co-isometric", r_coiso <= t, r_coiso)
    rep.add("S = S*P", r_sym <= t, r_sym)
    rep.add("||S|| <= 2", ns <= 2 + t, max(0.0, ns - 2))
    ok = not rep.failed()
    rep.kind = GAMMA_UNITARY if ok else NOT_GAMMA
    return ok, rep


def is_gamma_isometry(pair: OperatorPair, tol: Tolerance = DEFAULT_TOL):
    _commutator_gate(pair, tol)
    S, P, w = pair.S, pair.P, pair.window
    eye = np.eye(P.shape[0])
    rep = ClassificationReport(kind=INCONCLUSIVE)
    r_iso = opnorm(restrict(adj(P) @ P - eye, w))
    r_sym = opnorm(restrict(S - adj(S) @ P, w))
    ns = opnorm(S)
    t = tol.residual_tol
    rep.add("P isometric", r_iso <= t, r_iso)
    rep.add("S = S*P", r_sym <= t, r_sym)
    rep.add("||S|| <= 2", ns <= 2 + t, max(0.0, ns - 2))
    ok = not rep.failed()
    rep.kind = GAMMA_ISOMETRY if ok else NOT_GAMMA
    return ok, rep


def fundamental_op(pair: OperatorPair, tol: Tolerance = DEFAULT_TOL):
    """Solve S - S*P = D_P A D_P; returns (A on the defect basis, residual)."""
    S, P = pair.S, pair.P
    dd = defect_data(P, tol)
    C = S - adj(S) @ P
    X, residual = sandwich_solve(dd.D_P, dd.D_P, C, tol)
    F = adj(dd.Q_dP) @ X @ dd.Q_dP
    return F, residual


def is_gamma_contraction(
    pair: OperatorPair,
    tol: Tolerance = DEFAULT_TOL,
    wr_slack: float = WR_SLACK,
) -> ClassificationReport:
    """Full classification of a commuting pair.

    Produces the strongest applicable kind; every sub-check is recorded in
    the report with its residual.
    """
    _commutator_gate(pair, tol)
    uni, rep_u = is_gamma_unitary(pair, tol)
    S, P = pair.S, pair.P
    nP, nS = opnorm(P), opnorm(S)
    t = tol.residual_tol
    rep = ClassificationReport(kind=INCONCLUSIVE)
    rep.add("||P|| <= 1", nP <= 1 + t, max(0.0, nP - 1))
    rep.add("||S|| <= 2", nS <= 2 + t, max(0.0, nS - 2))
    if rep.failed():
        rep.kind = NOT_GAMMA
        return rep
    F, residual = fundamental_op(pair, tol)
    wA = numerical_radius(F, tol).value
    rep.fundamental_op = F
    rep.fundamental_residual = residual
    rep.wA = wA
    rep.add("fundamental equation consistent", residual <= t, residual)
    rep.add("w(A) <= 1", wA <= 1 + wr_slack, max(0.0, wA - 1))
    if rep.failed():
        rep.kind = NOT_GAMMA
        return rep
    if uni:
        rep.kind = GAMMA_UNITARY
        return rep
    iso, _ = is_gamma_isometry(pair, tol)
    rep.kind = GAMMA_ISOMETRY if iso else GAMMA_CONTRACTION
    return rep


def recover_pure_symbol(pair: OperatorPair, N: int, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Read the symbol back off a truncated pure model pair.

    S* - S P* concentrates the symbol's adjoint in the degree-0 diagonal
    block; all other interior blocks must vanish.
    """
    S, P = pair.S, pair.P
    dim = S.shape[0]
    if dim % (N + 1) != 0:
        raise NotPureModelForm(f"dimension {dim} is not a multiple of N+1 = {N + 1}")
    b = dim // (N + 1)
    E = adj(S) - S @ adj(P)
    A = adj(E[:b, :b])
    scale = max(1.0, opnorm(A))
    worst = 0.0
    for i in range(N):
        for j in range(N):
            if i == 0 and j == 0:
                continue
            worst = max(worst, opnorm(block_of(E, b, b, i, j)))
    if worst > 1e-10 * scale:
        raise NotPureModelForm(
            f"off-block residual {worst:.3e} too large for a pure model pair"
        )
    return A


# ---------------------------------------------------------------------------
# von Neumann sampling
# ---------------------------------------------------------------------------


def _poly_on_boundary_sup(coeffs: np.ndarray, grid: int) -> float:
    """Sup of |p(s, p)| over the boundary grid, with one local refinement."""
    deg = coeffs.shape[0] - 1

    def _eval(svals, pvals):
        out = np.zeros_like(svals, dtype=complex)
        spow = np.ones_like(svals, dtype=complex)
        for a in range(deg + 1):
            ppow = np.ones_like(pvals, dtype=complex)
            for b in range(deg + 1):
                c = coeffs[a, b]
                if c != 0:
                    out += c * spow * ppow
                ppow = ppow * pvals
            spow = spow * svals
        return np.abs(out)

    svals, pvals = boundary_grid(grid)
    vals = _eval(svals, pvals)
    best = int(np.argmax(vals))
    sup = float(vals[best])
    # refine around the winning torus point
    tj = 2 * np.pi * (best // grid) / grid
    tk = 2 * np.pi * (best % grid) / grid
    h = 2 * np.pi / grid
    for _ in range(3):
        loc = np.linspace(-h, h, 17)
        a1, a2 = np.meshgrid(tj + loc, tk + loc, indexing="ij")
        z1, z2 = np.exp(1j * a1).ravel(), np.exp(1j * a2).ravel()
        v = _eval(z1 + z2, z1 * z2)
        k = int(np.argmax(v))
        sup = max(sup, float(v[k]))
        tj, tk = a1.ravel()[k], a2.ravel()[k]
        h /= 8
    return sup


def _poly_of_pair(coeffs: np.ndarray, S: np.ndarray, P: np.ndarray) -> np.ndarray:
    deg = coeffs.shape[0] - 1
    n = S.shape[0]
    out = np.zeros((n, n), dtype=complex)
    Spow = np.eye(n, dtype=complex)
    for a in range(deg + 1):
        Ppow = np.eye(n, dtype=complex)
        for b in range(deg + 1):
            c = coeffs[a, b]
            if c != 0:
                out += c * Spow @ Ppow
            Ppow = Ppow @ P
        Spow = Spow @ S
    return out


def von_neumann_margin(
    pair: OperatorPair,
    degree: int = 3,
    trials: int = 100,
    grid: int = 64,
    seed: int = 0,
    tol: Tolerance = DEFAULT_TOL,
):
    """Minimum of sup-norm-on-boundary minus ||p(S, P)|| over sampled polynomials.

    The coordinate monomials are always included alongside the random
    trials, so canonical violations are found deterministically.  A
    negative margin certifies the pair is not a Gamma-contraction (up to
    grid slack).
    """
    _commutator_gate(pair, tol)
    rng = np.random.default_rng(seed)
    S, P = pair.S, pair.P

    def _coeff_array(pairs):
        c = np.zeros((degree + 1, degree + 1), dtype=complex)
        for (a, b), v in pairs:
            c[a, b] = v
        return c

    candidates = [_coeff_array([((1, 0), 1.0)]), _coeff_array([((0, 1), 1.0)])]
    for _ in range(trials):
        c = np.zeros((degree + 1, degree + 1), dtype=complex)
        for a in range(degree + 1):
            for b in range(degree + 1 - a):
                c[a, b] = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        candidates.append(c)

    min_margin = np.inf
    witness = candidates[0]
    for c in candidates:
        margin = _poly_on_boundary_sup(c, grid) - opnorm(_poly_of_pair(c, S, P))
        if margin < min_margin:
            min_margin = margin
            witness = c
    return float(min_margin), witness


# ---------------------------------------------------------------------------
# joint unitary equivalence
# ---------------------------------------------------------------------------


def find_unitary_intertwiner(
    ops1,
    ops2,
    tol: Tolerance = DEFAULT_TOL,
    seed: int = 0,
    null_tol: float = 1e-6,
):
    """Search for a unitary U with U T = T' U for every listed operator.

    Solves the joint Sylvester system for intertwiners of the operators
    and their adjoints, then extracts a unitary by polar decomposition of
    an invertible element of that space.  Returns (U, residual) or
    (None, inf).
    """
    ops1 = [as_matrix(T) for T in ops1]
    ops2 = [as_matrix(T) for T in ops2]
    n = ops1[0].shape[0]
    if any(T.shape != (n, n) for T in ops1):
        raise DimensionMismatch("first operator list has mismatched shapes")
    m = ops2[0].shape[0]
    if any(T.shape != (m, m) for T in ops2):
        raise DimensionMismatch("second operator list has mismatched shapes")
    if n != m:
        return None, np.inf

    eye = np.eye(n)
    rows = []
    for T1, T2 in zip(ops1, ops2):
        for A, B in ((T1, T2), (adj(T1), adj(T2))):
            rows.append(np.kron(eye, B) - np.kron(A.T, eye))
    K = np.vstack(rows)
    _, s, Vh = np.linalg.svd(K)
    scale = max(1.0, max(opnorm(T) for T in ops1 + ops2))
    keep = s <= null_tol * scale
    # pad: svd of a tall matrix reports min(n^2, rows) values
    n_null = int(np.sum(keep)) + max(0, n * n - len(s))
    if n_null == 0:
        return None, np.inf
    basis = adj(Vh)[:, Vh.shape[0] - n_null :]

    rng = np.random.default_rng(seed)
    best_U, best_res = None, np.inf
    for _ in range(8):
        coef = rng.standard_normal(n_null) + 1j * rng.standard_normal(n_null)
        X = (basis @ coef).reshape((n, n), order="F")
        W, _, Zh = np.linalg.svd(X)
        U = W @ Zh
        res = max(
            opnorm(U @ T1 - T2 @ U) / max(1.0, opnorm(T1))
            for T1, T2 in zip(ops1, ops2)
        )
        if res < best_res:
            best_U, best_res = U, res
    return best_U, float(best_res)


def _trace_words_agree(ops1, ops2, max_len: int, tol: Tolerance) -> bool:
    """Exhaustive DFS over words in the operators and adjoints."""
    alpha1 = ops1 + [adj(T) for T in ops1]
    alpha2 = ops2 + [adj(T) for T in ops2]
    n = ops1[0].shape[0]
    nrm = max(1.0, max(opnorm(T) for T in alpha1 + alpha2))

    def agree(t1, t2, length):
        slack = tol.residual_tol * 10 * max(1.0, nrm**length, abs(t1), abs(t2))
        return abs(t1 - t2) <= slack

    if not agree(float(n), float(ops2[0].shape[0]), 0):
        return False

    stack = [(np.eye(n, dtype=complex), np.eye(n, dtype=complex), 0)]
    while stack:
        W1, W2, length = stack.pop()
        if length >= max_len:
            continue
        for L1, L2 in zip(alpha1, alpha2):
            V1, V2 = L1 @ W1, L2 @ W2
            if not agree(np.trace(V1), np.trace(V2), length + 1):
                return False
            stack.append((V1, V2, length + 1))
    return True


def joint_unitary_equiv(
    ops1,
    ops2,
    max_word_len: Optional[int] = None,
    tol: Tolerance = DEFAULT_TOL,
) -> bool:
    """Joint unitary equivalence of two operator tuples.

    Traces of all words in the operators and adjoints up to the word-length
    bound are compared; when exhausting the bound is infeasible the
    comparison is settled exactly by the unitary-intertwiner certificate.
    A False from the trace comparison is always definitive.
    """
    ops1 = [as_matrix(T) for T in ops1]
    ops2 = [as_matrix(T) for T in ops2]
    if len(ops1) != len(ops2) or not ops1:
        raise DimensionMismatch("operator lists must be non-empty and equal length")
    n = ops1[0].shape[0]
    if any(T.shape != (n, n) for T in ops1):
        raise DimensionMismatch("first operator list has mismatched shapes")
    m = ops2[0].shape[0]
    if any(T.shape != (m, m) for T in ops2):
        raise DimensionMismatch("second operator list has mismatched shapes")
    if n != m:
        return False
    if n == 0:
        return True

    if max_word_len is None:
        max_word_len = 2 * n * n
    k = 2 * len(ops1)
    feasible = int(np.floor(np.log(WORD_BUDGET) / np.log(k))) if k > 1 else max_word_len
    eff = min(max_word_len, max(feasible, 2))

    if not _trace_words_agree(ops1, ops2, eff, tol):
        return False
    if eff >= max_word_len:
        return True
    U, res = find_unitary_intertwiner(ops1, ops2, tol)
    return U is not None and res <= max(tol.residual_tol * 100, 1e-7)
