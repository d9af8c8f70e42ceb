import numpy as np
import pytest
import scipy.linalg

from symbidisc.errors import IndefiniteInput, NotHermitian
from symbidisc.linalg import (
    Tolerance,
    adj,
    null_basis,
    opnorm,
    psd_sqrt,
    range_basis,
    sandwich_solve,
)


def rand_complex(rng, m, n):
    return rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))


def test_tolerance_validation():
    with pytest.raises(ValueError):
        Tolerance(rank_tol=-1e-10)
    with pytest.raises(ValueError):
        Tolerance(residual_tol=0.0)
    with pytest.raises(ValueError):
        Tolerance(rank_tol=2.0)


def test_psd_sqrt_diagonal():
    R = psd_sqrt(np.diag([4.0, 1.0, 0.0]))
    assert np.allclose(R, np.diag([2.0, 1.0, 0.0]))


def test_psd_sqrt_against_scipy():
    rng = np.random.default_rng(7)
    B = rand_complex(rng, 5, 5)
    M = B @ adj(B)
    R = psd_sqrt(M)
    assert np.allclose(R @ R, M)
    assert np.allclose(R, adj(R))
    assert np.allclose(R, scipy.linalg.sqrtm(M))


def test_psd_sqrt_flushes_noise_eigenvalues():
    # values within rank_tol of zero must become exact zeros
    M = np.diag([1.0, 1e-14, -1e-14])
    R = psd_sqrt(M)
    assert R[1, 1] == 0.0 and R[2, 2] == 0.0


def test_psd_sqrt_rejects_bad_input():
    with pytest.raises(NotHermitian):
        psd_sqrt(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(IndefiniteInput):
        psd_sqrt(np.diag([1.0, -0.5]))


def test_range_basis_rank_and_span():
    rng = np.random.default_rng(3)
    cols = rand_complex(rng, 6, 2)
    M = np.hstack([cols, cols @ rand_complex(rng, 2, 3)])  # rank 2
    Q = range_basis(M)
    assert Q.shape == (6, 2)
    assert np.allclose(adj(Q) @ Q, np.eye(2))
    # M's columns lie in span(Q)
    assert np.allclose(Q @ (adj(Q) @ M), M)


def test_range_basis_zero_matrix():
    Q = range_basis(np.zeros((4, 3)))
    assert Q.shape == (4, 0)


def test_range_basis_phase_convention_is_deterministic():
    rng = np.random.default_rng(11)
    M = rand_complex(rng, 5, 5)
    Q1 = range_basis(M)
    Q2 = range_basis(M * np.exp(0.7j))  # same column space, rotated
    assert np.allclose(Q1, Q2)
    for j in range(Q1.shape[1]):
        k = np.argmax(np.abs(Q1[:, j]))
        assert Q1[k, j].imag == pytest.approx(0.0, abs=1e-14)
        assert Q1[k, j].real > 0


def test_null_basis():
    M = np.array([[1.0, 1.0, 0.0]])
    Z = null_basis(M)
    assert Z.shape == (3, 2)
    assert np.allclose(M @ Z, 0)


def test_sandwich_solve_invertible_oracle():
    rng = np.random.default_rng(5)
    L = rand_complex(rng, 4, 4) + 4 * np.eye(4)
    R = rand_complex(rng, 4, 4) + 4 * np.eye(4)
    X_true = rand_complex(rng, 4, 4)
    X, res = sandwich_solve(L, R, L @ X_true @ R)
    assert res < 1e-10
    assert np.allclose(X, X_true)


def test_sandwich_solve_inconsistent_reports_residual():
    L = np.diag([1.0, 0.0])
    C = np.array([[0.0, 0.0], [0.0, 1.0]])  # outside ran(L) x ran(L)
    X, res = sandwich_solve(L, L, C)
    assert res == pytest.approx(1.0, abs=1e-12)


def test_opnorm_empty():
    assert opnorm(np.zeros((0, 0))) == 0.0
