import math

import mpmath
import numpy as np
import pytest

from algcomb.eigen import hermitian_eigenvalues, householder_tridiagonal
from algcomb.tracywidom import (
    EmpiricalDistribution,
    airy,
    airy_prime,
    airy_residual,
    gue_matrix,
    gue_sample,
    ks_distance,
    left_asymptote,
    painleve2_hastings_mcleod,
    painleve2_residual,
    sample_gue_chi,
    sample_tw,
    tw_cdf,
    tw_moments,
)


def test_airy_against_reference():
    for x in (-8.0, -2.5, 0.0, 1.0, 4.5, 9.0, 11.5):
        assert airy(x) == pytest.approx(float(mpmath.airyai(x)), rel=1e-10)
        assert airy_prime(x) == pytest.approx(
            float(mpmath.airyai(x, 1)), rel=1e-10
        )


def test_airy_value_at_zero():
    assert airy(0.0) == pytest.approx(0.3550280539, abs=1e-9)


def test_airy_asymptotic_ratio():
    x = 10.0
    asymptotic = math.exp(-(2 / 3) * x ** 1.5) / (
        2 * math.sqrt(math.pi) * x ** 0.25
    )
    assert airy(x) / asymptotic == pytest.approx(1.0, abs=1e-2)


def test_airy_ode_residual():
    assert airy_residual([-5.0, -1.0, 0.5, 3.0, 7.0]) <= 1e-8


def test_airy_domain_cap():
    with pytest.raises(OverflowError):
        airy(41.0)


def test_eigensolver_against_numpy():
    rng = np.random.default_rng(2)
    for n in (2, 5, 17, 60):
        m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        h = (m + m.conj().T) / 2
        got = hermitian_eigenvalues(h)
        want = np.linalg.eigvalsh(h)
        assert np.abs(got - want).max() < 1e-10 * max(1, np.abs(want).max())


def test_householder_rejects_non_hermitian():
    with pytest.raises(ValueError):
        householder_tridiagonal(np.array([[0.0, 1.0], [2.0, 0.0]]))


def test_hastings_mcleod_boundary_behavior():
    grid = painleve2_hastings_mcleod()
    assert grid.at(6.0) == pytest.approx(-airy(6.0), abs=1e-8)
    assert grid.at(0.0) == pytest.approx(-0.3670615, abs=1e-6)
    assert grid.at(-10.0) == pytest.approx(left_asymptote(-10.0), abs=1e-6)
    assert painleve2_residual(grid) <= 1e-8


def test_hastings_mcleod_step_stability():
    g1 = painleve2_hastings_mcleod(h=2e-3)
    g2 = painleve2_hastings_mcleod(h=1e-3)
    assert abs(g1.at(0.0) - g2.at(0.0)) < 1e-6


def test_tw_cdf_tails_and_monotonicity():
    cdf = tw_cdf()
    assert cdf.at(5.0) >= 1 - 1e-6
    assert cdf.at(-5.0) <= 1e-3
    assert np.all(np.diff(cdf.values) >= -1e-12)


def test_tw_moments_match_reference_constants():
    mean, var = tw_moments()
    assert mean == pytest.approx(-1.7711, abs=1e-3)
    assert var == pytest.approx(0.8132, abs=1e-3)


def test_gue_matrix_density_normalization():
    rng = np.random.Generator(np.random.Philox(key=np.uint64(17)))
    diag = np.array([gue_matrix(1, rng)[0, 0].real for _ in range(20000)])
    assert diag.var() == pytest.approx(0.5, abs=0.02)


def test_gue_sample_contract():
    eigs = gue_sample(25, seed=11)
    assert len(eigs) == 25
    assert np.all(np.diff(eigs) <= 0)
    assert np.array_equal(eigs, gue_sample(25, seed=11))


def test_ks_distance_self_consistency():
    cdf = tw_cdf()
    samples = sample_tw(10000, seed=3, cdf=cdf)
    assert ks_distance(EmpiricalDistribution(samples), cdf) <= 0.02


def test_gue_scaled_statistic_is_near_tw():
    cdf = tw_cdf()
    values = sample_gue_chi(60, 300, seed=9)
    assert ks_distance(values, cdf) <= 0.12
