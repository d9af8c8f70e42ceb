import numpy as np
import pytest

from symbidisc.classify import (
    GAMMA_CONTRACTION,
    GAMMA_UNITARY,
    NOT_GAMMA,
    find_unitary_intertwiner,
    fundamental_op,
    is_gamma_contraction,
    is_gamma_unitary,
    joint_unitary_equiv,
    recover_pure_symbol,
    von_neumann_margin,
)
from symbidisc.dilation import gamma_unitary_synth
from symbidisc.errors import NotCommuting, NotPureModelForm
from symbidisc.generate import (
    random_commuting_unitaries,
    random_gamma_contraction,
    random_symbol,
    random_unitary,
)
from symbidisc.hardy import gamma_isometry_model
from symbidisc.linalg import adj, opnorm
from symbidisc.pair import make_pair


def test_unitary_pair_classifies_unitary():
    U1, U2 = random_commuting_unitaries(np.random.default_rng(0), 3)
    pair = gamma_unitary_synth(U1, U2)
    ok, _ = is_gamma_unitary(pair)
    assert ok
    assert is_gamma_contraction(pair).kind == GAMMA_UNITARY


def test_commutator_gate():
    S = np.array([[0.0, 1.0], [0.0, 0.0]])
    P = np.array([[0.0, 0.0], [1.0, 0.0]])
    with pytest.raises(NotCommuting):
        is_gamma_contraction(make_pair(S, P))


def test_scalar_fundamental_operator():
    # (s, p) = (1.2, 0.5): A = (s - s*p) / (1 - p^2) = 0.8
    pair = make_pair([[1.2]], [[0.5]])
    F, residual = fundamental_op(pair)
    assert residual < 1e-12
    assert F[0, 0] == pytest.approx(0.8, abs=1e-12)
    rep = is_gamma_contraction(pair)
    assert rep.kind == GAMMA_CONTRACTION
    assert rep.wA == pytest.approx(0.8, abs=1e-9)


def test_designed_negatives():
    assert is_gamma_contraction(make_pair(np.diag([1.2, 0.0]), np.zeros((2, 2)))).kind == NOT_GAMMA
    assert is_gamma_contraction(make_pair([[2.2]], [[1.0]])).kind == NOT_GAMMA


def test_jordan_pair_is_gamma_contraction():
    # S = [[0,2],[0,0]], P = 0: fundamental operator is S itself, w = 1
    rep = is_gamma_contraction(make_pair([[0.0, 2.0], [0.0, 0.0]], np.zeros((2, 2))))
    assert rep.kind == GAMMA_CONTRACTION
    assert rep.wA == pytest.approx(1.0, abs=1e-8)


def test_recover_pure_symbol_round_trip():
    rng = np.random.default_rng(2)
    A = random_symbol(rng, 3)
    pair = gamma_isometry_model(A, 7)
    assert opnorm(recover_pure_symbol(pair, 7) - A) < 1e-13


def test_recover_pure_symbol_rejects_non_model():
    rng = np.random.default_rng(3)
    S = np.kron(np.eye(4), random_symbol(rng, 2))
    with pytest.raises(NotPureModelForm):
        recover_pure_symbol(make_pair(S, np.zeros_like(S)), 3)


def test_von_neumann_margin_violation():
    margin, _ = von_neumann_margin(make_pair([[2.2]], [[1.0]]), trials=20, seed=1)
    assert margin <= -0.19


def test_von_neumann_margin_nonnegative_on_contraction():
    rng = np.random.default_rng(4)
    pair = random_gamma_contraction(rng)
    margin, _ = von_neumann_margin(pair, trials=20, seed=1)
    assert margin >= -1e-6


def test_joint_unitary_equiv_conjugates():
    rng = np.random.default_rng(5)
    pair = random_gamma_contraction(rng)
    U = random_unitary(rng, pair.dim)
    S2, P2 = U @ pair.S @ adj(U), U @ pair.P @ adj(U)
    assert joint_unitary_equiv([pair.S, pair.P], [S2, P2])


def test_joint_unitary_equiv_detects_inequivalence():
    # same spectra, different Jordan structure
    A1 = np.zeros((3, 3))
    A1[0, 1] = 1.0
    A2 = np.zeros((3, 3))
    A2[0, 1] = 1.0
    A2[1, 2] = 1.0
    assert not joint_unitary_equiv([A1], [A2])
    assert not joint_unitary_equiv([np.eye(2)], [np.eye(3)])


def test_find_unitary_intertwiner_recovers_conjugation():
    rng = np.random.default_rng(6)
    A = random_symbol(rng, 4)
    U = random_unitary(rng, 4)
    B = U @ A @ adj(U)
    V, res = find_unitary_intertwiner([A], [B])
    assert res < 1e-10
    assert opnorm(V @ A - B @ V) < 1e-10


def test_find_unitary_intertwiner_fails_when_inequivalent():
    # the intertwiner space is nonzero here but contains no unitary, so the
    # returned candidate must carry a large residual
    V, res = find_unitary_intertwiner([np.diag([1.0, 2.0])], [np.diag([1.0, 3.0])])
    assert res > 1e-2
    V, res = find_unitary_intertwiner([np.eye(2)], [-np.eye(2)])
    assert V is None or res > 1e-2
