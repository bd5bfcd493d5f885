import math

import mpmath
import numpy as np
import pytest

from specfun import AccuracyBudget, DomainError, appell_f1, gauss_2f1

TIGHT = AccuracyBudget(rel_tol=1e-15, abs_tol=1e-300)


def test_2f1_at_origin():
    assert gauss_2f1(3.2, -1.7, 4.5, 0.0) == 1.0


def test_2f1_logarithm_identity():
    assert gauss_2f1(1.0, 1.0, 2.0, -0.5) == pytest.approx(2.0 * math.log(1.5), rel=1e-12)
    assert gauss_2f1(1.0, 1.0, 2.0, 0.5) == pytest.approx(2.0 * math.log(2.0), rel=1e-12)


def test_2f1_large_negative_argument():
    assert gauss_2f1(1.0, 1.0, 2.0, -9.0) == pytest.approx(math.log(10.0) / 9.0, rel=1e-10)


def test_2f1_pfaff_against_high_precision():
    reference = float(mpmath.hyp2f1(4, 3, 8, -1))
    assert gauss_2f1(4.0, 3.0, 8.0, -1.0, TIGHT) == pytest.approx(reference, rel=1e-12)


@pytest.mark.parametrize("a,b,c,z,rel", [
    (2.5, 1.25, 3.75, 0.6, 1e-11),
    (9.0, 8.0, 18.0, -3.0, 1e-11),
    (16.0, 15.0, 32.0, -49.0, 1e-9),
    (0.5, 4.0, 1.5, 0.95, 1e-9),
    (3.0, 4.0, 8.0, 1.0 - 1e-8, 1e-9),
    (2.0, 3.0, 102.0, 0.97, 1e-12),
    (2.0, 3.0, 6.0, 0.9856, 1e-11),
    (2.0, 3.0, 40.0, 0.999, 1e-10),
])
def test_2f1_matches_mpmath(a, b, c, z, rel):
    reference = float(mpmath.hyp2f1(a, b, c, z))
    assert gauss_2f1(a, b, c, z, TIGHT) == pytest.approx(reference, rel=rel)


def test_2f1_terminating_polynomial():
    # 1 - 3 + 2.4
    assert gauss_2f1(-2.0, 3.0, 4.0, 2.0) == pytest.approx(0.4, rel=1e-14)
    assert gauss_2f1(5.0, -3.0, 2.0, 1.0) == pytest.approx(float(mpmath.hyp2f1(5, -3, 2, 1)), rel=1e-13)


def test_2f1_gauss_summation_at_one():
    assert gauss_2f1(7.0, 4.0, 14.0, 1.0) == pytest.approx(float(mpmath.hyp2f1(7, 4, 14, 1)), rel=1e-12)
    assert gauss_2f1(0.5, 1.5, 4.25, 1.0) == pytest.approx(float(mpmath.hyp2f1(0.5, 1.5, 4.25, 1)), rel=1e-12)
    # 1/Γ(c - a) vanishes
    assert gauss_2f1(2.0, -1.5, 1.0, 1.0) == 0.0


def test_f1_reduces_on_the_unit_edge():
    value = appell_f1(7.0, 4.0, 2.0, 14.0, 1.0, 0.0)
    assert value == pytest.approx(float(mpmath.hyp2f1(7, 4, 14, 1)), rel=1e-12)


def test_2f1_domain_errors():
    with pytest.raises(DomainError):
        gauss_2f1(1.5, 2.0, 3.0, 1.0)
    with pytest.raises(DomainError):
        gauss_2f1(1.5, 2.0, -2.0, 0.3)


def test_2f1_contiguous_relation():
    rng = np.random.default_rng(3)
    for _ in range(20):
        a = rng.uniform(1.0, 4.0)
        b = rng.uniform(0.5, 3.0)
        c = rng.uniform(1.0, 6.0)
        z = rng.uniform(-5.0, 0.9)
        first = c * (1 - z) * gauss_2f1(a, b, c, z)
        second = c * gauss_2f1(a - 1, b, c, z)
        third = (c - b) * z * gauss_2f1(a, b, c + 1, z)
        scale = abs(first) + abs(second) + abs(third)
        assert abs(first - second + third) <= 1e-9 * scale


def test_f1_at_origin():
    assert appell_f1(2.0, 1.5, 0.5, 4.0, 0.0, 0.0) == 1.0


def test_f1_reduces_when_second_exponent_vanishes():
    value = appell_f1(2.0, 1.5, 0.0, 4.5, 0.4, 0.9)
    assert value == pytest.approx(gauss_2f1(2.0, 1.5, 4.5, 0.4), rel=1e-12)


def test_f1_equal_arguments():
    value = appell_f1(2.0, 1.0, 1.0, 4.0, 0.3, 0.3)
    assert value == pytest.approx(gauss_2f1(2.0, 2.0, 4.0, 0.3), rel=1e-12)


@pytest.mark.parametrize("x,y", [(0.5, -0.4), (0.6, 0.35), (-0.65, 0.45), (0.31, 0.69)])
def test_f1_series_and_integral_agree(x, y):
    budget = AccuracyBudget(rel_tol=1e-12, abs_tol=1e-15)
    series = appell_f1(1.5, 0.7, 1.3, 3.2, x, y, budget, method="series")
    integral = appell_f1(1.5, 0.7, 1.3, 3.2, x, y, budget, method="integral")
    assert series == pytest.approx(integral, rel=1e-9)


def test_f1_integral_path_against_mpmath():
    reference = float(mpmath.appellf1(2, 1.5, 2, 5, 0.85, 0.5))
    budget = AccuracyBudget(rel_tol=1e-12, abs_tol=1e-15)
    assert appell_f1(2.0, 1.5, 2.0, 5.0, 0.85, 0.5, budget) == pytest.approx(reference, rel=1e-9)


def test_f1_negative_second_argument():
    budget = AccuracyBudget(rel_tol=1e-12, abs_tol=1e-15)
    reference = float(mpmath.appellf1(3, 2, 1, 6, 0.2, -0.5))
    assert appell_f1(3.0, 2.0, 1.0, 6.0, 0.2, -0.5, budget) == pytest.approx(reference, rel=1e-10)


def test_f1_pole_inside_euler_interval():
    with pytest.raises(DomainError):
        appell_f1(2.0, 3.0, 1.0, 5.0, 1.5, 0.2)
