import math

import mpmath
import numpy as np
import pytest

from fdist import (
    IndexTuple,
    Method,
    cdf_h0_corollary1,
    cdf_h0_corollary2,
    cdf_h0_reciprocal,
    cdf_h0_theorem1,
    cdf_scn_bruteforce_quadrature,
    cdf_scn_monte_carlo,
    jacobi_coefficients,
    joint_density_h0,
    log_f_normalization,
    log_selberg_constant,
    null_cdf_ledger,
    row_bounds,
)
from matrand import ProblemDims
from specfun import AccuracyBudget, DomainError

QUAD = AccuracyBudget(rel_tol=1e-10, abs_tol=1e-14, max_quad_refinements=200)


@pytest.mark.parametrize("m,n,p,expected", [
    (2, 2, 2, 12.0),
    (2, 3, 2, 72.0),
    (2, 3, 3, 720.0),
    (3, 3, 3, 2160.0),
])
def test_normalization_constant(m, n, p, expected):
    assert math.exp(log_f_normalization(ProblemDims(m, n, p))) == pytest.approx(expected, rel=1e-12)


def test_selberg_constant_small_cases():
    assert log_selberg_constant(1) == 0.0
    assert math.exp(log_selberg_constant(2)) == pytest.approx(1.0 / 3.0, rel=1e-14)
    assert math.exp(log_selberg_constant(3)) == pytest.approx(1.0 / 120.0, rel=1e-14)


def test_jacobi_coefficients_are_monic_and_orthogonal():
    table = jacobi_coefficients(6)
    assert table[1, 0] == pytest.approx(0.25)
    assert table[1, 1] == pytest.approx(-1.0)
    assert table[2, :3] == pytest.approx([1.0 / 15.0, -2.0 / 3.0, 1.0])
    one_minus_v = np.polynomial.Polynomial([1.0, -1.0])
    weight = np.polynomial.Polynomial([0.0, 0.0, 1.0])
    for d in range(1, 7):
        poly = sum(table[d, s] * one_minus_v ** s for s in range(d + 1))
        assert poly.coef[d] == pytest.approx(1.0, rel=1e-12)
        for k in range(d):
            moment = (poly * weight * np.polynomial.Polynomial([0.0] * k + [1.0])).integ()
            assert moment(1.0) - moment(0.0) == pytest.approx(0.0, abs=1e-12)


def test_index_tuple_bounds():
    dims = ProblemDims(3, 4, 5)
    assert row_bounds(dims) == (4, 3, 4)
    tuple_ = IndexTuple(dims, (4, 0, 2))
    assert tuple_.signal_sum == 4
    assert tuple_.noise_sum == 2
    with pytest.raises(DomainError):
        IndexTuple(dims, (0, 4, 0))
    with pytest.raises(DomainError):
        IndexTuple(dims, (0, 0))


def test_ledger_for_single_noise_row():
    ledger = null_cdf_ledger(ProblemDims(2, 3, 2))
    assert ledger.exponent == 4
    assert math.exp(ledger.log_c0) == pytest.approx(24.0, rel=1e-12)
    assert ledger.sign_c0 == 1
    assert list(ledger.noise_sums) == [0, 1]
    assert ledger.coefficients == pytest.approx([0.25, -1.0])
    assert ledger.tuple_count == 2


def test_corollary2_single_sensor_and_domain():
    assert cdf_h0_corollary2(1, 7.0).value == 1.0
    with pytest.raises(DomainError):
        cdf_h0_corollary2(2, 1.0)
    with pytest.raises(DomainError):
        cdf_h0_corollary2(2, float("inf"))


@pytest.mark.parametrize("m", [2, 3])
@pytest.mark.parametrize("t", [1.2, 2.0, 5.0, 40.0])
def test_corollary2_matches_direct_hypergeometric(m, t):
    q = m * m
    mpmath.mp.dps = 30
    reference = q * mpmath.beta(q, q) * mpmath.power(t - 1, q - 1) * mpmath.hyp2f1(q, q - 1, 2 * q, 1 - t)
    result = cdf_h0_corollary2(m, t)
    assert result.method is Method.COROLLARY2
    assert result.value == pytest.approx(float(reference), rel=1e-10)


@pytest.mark.parametrize("t", [1.3, 3.0, 20.0])
def test_corollary2_matches_bruteforce_quadrature(t):
    dims = ProblemDims(2, 2, 2)
    assert cdf_scn_bruteforce_quadrature(dims, t, budget=QUAD).value == pytest.approx(
        cdf_h0_corollary2(2, t).value, abs=1e-7)


@pytest.mark.parametrize("m,n,p", [(2, 3, 2), (2, 3, 4), (2, 2, 4), (2, 5, 3)])
@pytest.mark.parametrize("t", [1.5, 4.0, 25.0])
def test_theorem1_matches_bruteforce_quadrature(m, n, p, t):
    dims = ProblemDims(m, n, p)
    exact = cdf_h0_theorem1(dims, t)
    reference = cdf_scn_bruteforce_quadrature(dims, t, budget=QUAD)
    assert exact.method is Method.THEOREM1
    assert exact.value == pytest.approx(reference.value, abs=1e-6)


@pytest.mark.parametrize("m,p", [(2, 3), (2, 4), (3, 4), (3, 5)])
@pytest.mark.parametrize("t", [1.5, 3.0, 12.0])
def test_corollary1_agrees_with_theorem1(m, p, t):
    dims = ProblemDims(m, m, p)
    closed = cdf_h0_corollary1(dims, t)
    integral = cdf_h0_theorem1(dims, t)
    assert closed.method is Method.COROLLARY1
    assert closed.value == pytest.approx(integral.value, rel=1e-7, abs=1e-10)


def test_corollary1_without_signal_rows_is_corollary2():
    result = cdf_h0_corollary1(ProblemDims(3, 3, 3), 2.5)
    assert result.method is Method.COROLLARY2
    assert result.value == cdf_h0_corollary2(3, 2.5).value


def test_corollary1_rejects_bad_shapes():
    with pytest.raises(DomainError):
        cdf_h0_corollary1(ProblemDims(2, 3, 3), 2.0)
    with pytest.raises(DomainError):
        cdf_h0_corollary1(ProblemDims(2, 2, 6), 2.0)


@pytest.mark.parametrize("m,n,p", [(2, 3, 4), (3, 4, 3), (3, 5, 4), (2, 4, 2)])
@pytest.mark.parametrize("t", [1.4, 6.0])
def test_reciprocal_symmetry(m, n, p, t):
    dims = ProblemDims(m, n, p)
    assert cdf_h0_theorem1(dims, t).value == pytest.approx(
        cdf_h0_theorem1(dims.swapped(), t).value, rel=1e-7, abs=1e-10)


def test_reciprocal_form_for_square_signal_side():
    dims = ProblemDims(2, 4, 2)
    assert cdf_h0_reciprocal(dims, 3.0).value == pytest.approx(cdf_h0_theorem1(dims, 3.0).value, rel=1e-7)
    with pytest.raises(DomainError):
        cdf_h0_reciprocal(ProblemDims(2, 3, 3), 3.0)


@pytest.mark.parametrize("dims", [ProblemDims(2, 3, 4), ProblemDims(3, 3, 4), ProblemDims(3, 4, 5)])
def test_null_cdf_is_monotone_and_bounded(dims):
    grid = [1.05, 1.2, 1.5, 2.0, 3.0, 5.0, 10.0, 30.0, 100.0, 1000.0]
    values = [cdf_h0_theorem1(dims, t).value for t in grid]
    assert all(b >= a - 1e-10 for a, b in zip(values, values[1:]))
    assert all(-1e-10 <= v <= 1.0 + 1e-8 for v in values)


def test_null_cdf_limits():
    dims = ProblemDims(2, 3, 2)
    assert abs(cdf_h0_theorem1(dims, 1.0 + 1e-6).value) < 1e-12
    assert cdf_h0_theorem1(dims, 1e7).value == pytest.approx(1.0, abs=1e-4)
    assert cdf_h0_corollary2(2, 1e8).value == pytest.approx(1.0, abs=1e-5)
    assert cdf_h0_corollary2(3, 1.0 + 1e-6).value < 1e-30


def test_density_integrates_to_one_for_two_sensors():
    dims = ProblemDims(2, 3, 4)
    assert cdf_scn_bruteforce_quadrature(dims, 1e12, budget=QUAD).value == pytest.approx(1.0, abs=1e-8)


def test_joint_density_h0_checks():
    dims = ProblemDims(2, 2, 2)
    assert joint_density_h0(dims, [1.0, 1.0]) == 0.0
    assert joint_density_h0(dims, [1.0, 2.0]) == pytest.approx(12.0 / (2.0 ** 4 * 3.0 ** 4))
    with pytest.raises(DomainError):
        joint_density_h0(dims, [2.0, 1.0])
    with pytest.raises(DomainError):
        joint_density_h0(dims, [0.0, 1.0])
    with pytest.raises(DomainError):
        joint_density_h0(dims, [1.0, 2.0, 3.0])


@pytest.mark.parametrize("dims,t", [(ProblemDims(2, 2, 3), 3.0), (ProblemDims(3, 4, 3), 8.0)])
def test_null_cdf_against_monte_carlo(dims, t):
    exact = cdf_h0_theorem1(dims, t).value
    estimate = cdf_scn_monte_carlo(dims, [t], draws=200_000, seed=11, threads=2)[0]
    sigma = math.sqrt(exact * (1.0 - exact) / 200_000)
    assert abs(estimate.value - exact) < 4.0 * math.sqrt(2.0) * sigma
