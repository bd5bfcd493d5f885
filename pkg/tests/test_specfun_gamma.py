import math

import mpmath
import numpy as np
import pytest

from specfun import (
    DomainError,
    complex_mv_ln_gamma,
    ln_beta,
    ln_gamma,
    pochhammer_ln,
)


def test_ln_gamma_known_values():
    assert ln_gamma(1.0) == pytest.approx(0.0, abs=1e-15)
    assert ln_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-14)
    assert ln_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-14)


@pytest.mark.parametrize("x", [0.0, -1.0, -0.5])
def test_ln_gamma_rejects_nonpositive(x):
    with pytest.raises(DomainError):
        ln_gamma(x)


def test_ln_gamma_against_high_precision():
    for x in [1e-3, 0.37, 1.5, 2.0, 7.25, 33.3, 1e3, 12345.6, 1e6]:
        reference = float(mpmath.loggamma(mpmath.mpf(x)))
        assert abs(ln_gamma(x) - reference) <= 1e-13 * max(abs(reference), 1.0)


def test_ln_gamma_recurrence():
    rng = np.random.default_rng(7)
    for x in rng.uniform(0.5, 50.0, size=25):
        lhs = math.exp(ln_gamma(x + 1.0))
        rhs = x * math.exp(ln_gamma(x))
        assert lhs == pytest.approx(rhs, rel=1e-12)


def test_complex_mv_ln_gamma_reductions():
    assert complex_mv_ln_gamma(1, 3.0) == pytest.approx(math.log(2.0), rel=1e-14)
    assert complex_mv_ln_gamma(2, 2.0) == pytest.approx(math.log(math.pi), rel=1e-14)


def test_complex_mv_ln_gamma_direct_product():
    with mpmath.workdps(40):
        reference = mpmath.log(mpmath.pi ** 3 * mpmath.gamma(5) * mpmath.gamma(4) * mpmath.gamma(3))
    assert complex_mv_ln_gamma(3, 5.0) == pytest.approx(float(reference), rel=1e-14)


def test_complex_mv_ln_gamma_domain():
    with pytest.raises(DomainError):
        complex_mv_ln_gamma(3, 2.0)


def test_pochhammer_small_cases():
    assert pochhammer_ln(3.0, 2) == (1, pytest.approx(math.log(12.0)), False)
    empty = pochhammer_ln(-4.2, 0)
    assert empty.sign == 1 and empty.ln_magnitude == 0.0
    zero = pochhammer_ln(-2.0, 4)
    assert zero.is_zero and zero.sign == 0


def test_pochhammer_negative_noninteger():
    result = pochhammer_ln(-2.5, 3)
    assert result.sign == -1
    assert result.ln_magnitude == pytest.approx(math.log(1.875), rel=1e-14)


def test_pochhammer_matches_factor_product():
    rng = np.random.default_rng(11)
    for a in rng.uniform(-20.0, 40.0, size=30):
        k = int(rng.integers(0, 25))
        factors = [a + i for i in range(k)]
        sign = 1
        for factor in factors:
            if factor < 0:
                sign = -sign
        expected = math.fsum(math.log(abs(f)) for f in factors)
        result = pochhammer_ln(a, k)
        assert result.sign == sign
        assert result.ln_magnitude == pytest.approx(expected, rel=1e-13, abs=1e-13)


def test_ln_beta_values():
    assert ln_beta(1.0, 1.0) == pytest.approx(0.0, abs=1e-15)
    assert ln_beta(4.0, 4.0) == pytest.approx(math.log(1.0 / 140.0), rel=1e-13)
    reference = mpmath.quad(lambda u: u ** 1.5 * (1 - u) ** 2.5, [0, 1])
    assert ln_beta(2.5, 3.5) == pytest.approx(float(mpmath.log(reference)), rel=1e-12)


def test_ln_beta_domain():
    with pytest.raises(DomainError):
        ln_beta(0.0, 1.0)
