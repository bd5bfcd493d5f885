import math
from itertools import product

import pytest

from specfun import (
    AccuracyBudget,
    DomainError,
    NonConvergenceError,
    integrate_interval,
    integrate_semi_infinite,
)


def test_exponential_tail():
    value, err = integrate_semi_infinite(lambda y: math.exp(-y))
    assert value == pytest.approx(1.0, rel=1e-10)
    assert err < 1e-8


def test_rational_integrands():
    assert integrate_semi_infinite(lambda y: 1.0 / (1.0 + y) ** 2).value == pytest.approx(1.0, rel=1e-12)
    assert integrate_semi_infinite(lambda y: y / (1.0 + y) ** 4).value == pytest.approx(1.0 / 6.0, rel=1e-10)


@pytest.mark.parametrize("s,r", list(product([1.0, 2.0, 3.5, 7.0], repeat=2)))
def test_beta_integrals(s, r):
    budget = AccuracyBudget(rel_tol=1e-12, abs_tol=1e-15)
    value, _ = integrate_semi_infinite(lambda y: y ** (s - 1) / (1.0 + y) ** (s + r), budget)
    expected = math.exp(math.lgamma(s) + math.lgamma(r) - math.lgamma(s + r))
    assert value == pytest.approx(expected, rel=1e-10)


def test_breakpoints_are_accepted():
    value, _ = integrate_semi_infinite(lambda y: math.exp(-y), breakpoints=[0.5, 1.0, 20.0])
    assert value == pytest.approx(1.0, rel=1e-10)


def test_divergent_integral_is_reported():
    with pytest.raises(NonConvergenceError):
        integrate_semi_infinite(lambda y: 1.0 / y, AccuracyBudget(max_quad_refinements=5))


def test_interval_requires_ordered_limits():
    with pytest.raises(DomainError):
        integrate_interval(lambda u: u, 1.0, 0.0)
