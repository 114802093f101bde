"""Structural identities of the fixed matrix representation."""

import numpy as np
import pytest

from spindual.algebra import (
    EPSILON_LOWER,
    ETA,
    PAIRS,
    check,
    gamma,
    gamma_lower,
    pi,
    sigma,
    sigma_upper,
)

I4 = np.eye(4)


def test_metric_squares():
    assert np.allclose(gamma(0) @ gamma(0), I4)
    assert np.allclose(gamma(1) @ gamma(1), -I4)


def test_anticommutation_all_pairs():
    for a in range(4):
        for b in range(4):
            anti = gamma(a) @ gamma(b) + gamma(b) @ gamma(a)
            assert np.allclose(anti, 2 * ETA[a, b] * I4, atol=1e-15)


def test_pi_squares_and_anticommutes():
    assert np.allclose(pi() @ pi(), I4)
    for a in range(4):
        assert np.allclose(pi() @ gamma(a) + gamma(a) @ pi(), 0.0, atol=1e-15)


def test_pi_duality_relation():
    # 2i sigma_ab = eps_abcd pi sigma^cd for all six pairs
    for a, b in PAIRS:
        lhs = 2j * sigma(a, b)
        rhs = np.zeros((4, 4), dtype=complex)
        for c in range(4):
            for d in range(4):
                rhs += EPSILON_LOWER[a, b, c, d] * (pi() @ sigma_upper(c, d))
        assert np.allclose(lhs, rhs, atol=1e-14)


def test_sigma_antisymmetry_and_definition():
    assert np.allclose(sigma(1, 1), 0.0)
    assert np.allclose(sigma(0, 1) + sigma(1, 0), 0.0)
    direct = gamma_lower(0) @ gamma_lower(1) - gamma_lower(1) @ gamma_lower(0)
    assert np.allclose(4 * sigma(0, 1), direct, atol=1e-15)


def test_index_validation():
    with pytest.raises(ValueError):
        gamma(4)
    with pytest.raises(ValueError):
        gamma(-1)
    with pytest.raises(ValueError):
        sigma(0, 5)


def test_self_check_runs():
    check()
