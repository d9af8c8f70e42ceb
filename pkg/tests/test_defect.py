import numpy as np
import pytest

from symbidisc.defect import (
    build_model_space,
    cnu_check,
    default_truncation,
    defect_data,
    delta_eval,
    pi_nf_matrix,
    spectral_radius,
    theta_eval,
    theta_taylor,
    truncation_tail,
    x_limit,
)
from symbidisc.errors import NotAContraction, NotCnu, TruncationTooSmall
from symbidisc.generate import random_strict_contraction, random_unitary
from symbidisc.linalg import adj, opnorm


def test_defect_of_unitary_vanishes():
    U = random_unitary(np.random.default_rng(0), 3)
    dd = defect_data(U)
    assert dd.rank_dP == 0 and dd.rank_dPstar == 0
    assert opnorm(dd.D_P) == 0.0


def test_defect_of_strict_contraction_full_rank():
    P = 0.5 * random_unitary(np.random.default_rng(1), 3)
    dd = defect_data(P)
    assert dd.rank_dP == 3
    assert np.allclose(dd.D_P @ dd.D_P, np.eye(3) - adj(P) @ P)


def test_contraction_check():
    with pytest.raises(NotAContraction):
        defect_data(np.diag([1.5, 0.0]))


def test_cnu_check_rejects_unimodular_spectrum():
    with pytest.raises(NotCnu):
        cnu_check(np.diag([1.0, 0.3]))


def test_scalar_moebius_coefficients():
    # Theta for P = c is the Moebius map: C_0 = -c, C_k = (1 - c^2) c^(k-1)
    for c in (0.3, 0.5, 0.9):
        cf = theta_taylor([[c]], 10)
        assert cf.taylor.coeffs[0][0, 0] == pytest.approx(-c, abs=1e-13)
        for k in range(1, 11):
            expect = (1 - c * c) * c ** (k - 1)
            assert cf.taylor.coeffs[k][0, 0] == pytest.approx(expect, abs=1e-13)


def test_theta_eval_matches_taylor_series():
    rng = np.random.default_rng(3)
    P = random_strict_contraction(rng, 3, 0.6)
    K = 60
    cf = theta_taylor(P, K)
    z = 0.4 + 0.3j
    series = sum(cf.taylor.coeffs[k] * z**k for k in range(K + 1))
    assert np.allclose(series, theta_eval(cf, z), atol=1e-10)


def test_theta_contractive_on_disk():
    rng = np.random.default_rng(4)
    P = random_strict_contraction(rng, 3, 0.9)
    cf = theta_taylor(P, 0)
    for t in np.linspace(0, 2 * np.pi, 32, endpoint=False):
        assert opnorm(theta_eval(cf, np.exp(1j * t))) <= 1 + 1e-10


def test_boundary_defect_vanishes_for_matrices():
    rng = np.random.default_rng(5)
    P = random_strict_contraction(rng, 2, 0.8)
    cf = theta_taylor(P, 0)
    assert opnorm(delta_eval(cf, 1.234)) < 1e-7


def test_x_limit():
    assert opnorm(x_limit(np.diag([0.5, 0.2]))) < 1e-6
    U = random_unitary(np.random.default_rng(6), 3)
    assert np.allclose(x_limit(U), np.eye(3))


def test_truncation_controls():
    P = np.diag([0.5, 0.1])
    assert spectral_radius(P) == pytest.approx(0.5)
    N = default_truncation(P)
    assert N >= 32
    assert truncation_tail(P, N) <= 0.5 ** (N + 1) + 1e-15


def test_model_space_dimension_equals_source():
    rng = np.random.default_rng(7)
    for n in (1, 2, 3):
        P = random_strict_contraction(rng, n, 0.8, rho_max=0.5)
        ms = build_model_space(P, 32)
        assert ms.dim == n
        assert ms.delta_norm <= 1e-7
        assert ms.trunc_error <= 1e-6


def test_model_space_rejects_insufficient_truncation():
    with pytest.raises(TruncationTooSmall):
        build_model_space(np.diag([0.9, 0.1]), 8)


def test_pi_nf_identities():
    rng = np.random.default_rng(8)
    P = random_strict_contraction(rng, 3, 0.8, rho_max=0.5)
    N = 40
    Pi = pi_nf_matrix(P, N)
    assert np.allclose(adj(Pi) @ Pi, np.eye(3), atol=1e-8)
    from symbidisc.hardy import shift_op

    rs = Pi.shape[0] // (N + 1)
    Mz = shift_op(rs, N).matrix
    assert opnorm(adj(Pi) @ Mz @ Pi - P) < 1e-8
    assert opnorm(adj(Mz) @ Pi - Pi @ adj(P)) < 1e-8
