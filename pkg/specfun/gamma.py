"""
Gamma-family kernels in log space.

The normalisation constants of the eigenvalue densities are ratios of
products of factorials that overflow double precision already for
moderate dimensions, so everything here returns logarithms (and a
separate sign where the quantity can be negative).
"""

import math
from typing import NamedTuple

import numpy as np
from scipy import special

from .exceptions import DomainError

# Below this length a Pochhammer symbol is accumulated factor by factor,
# which keeps the log-magnitude accurate for large arguments.
_DIRECT_POCHHAMMER_TERMS = 4096


class PochhammerLog(NamedTuple):
    """Sign and log-magnitude of a Pochhammer symbol ``(a)_k``."""

    sign: int
    ln_magnitude: float
    is_zero: bool = False


def ln_gamma(x: float) -> float:
    """
    Natural logarithm of the gamma function for positive real ``x``.

    Args:
        x: Positive argument

    Returns:
        float: ln Γ(x)
    """
    if not x > 0:
        raise DomainError(f"ln_gamma requires x > 0, got {x}")
    return float(special.gammaln(x))


def log_factorial(n: int) -> float:
    """ln(n!) for a nonnegative integer."""
    if n < 0:
        raise DomainError(f"log_factorial requires n >= 0, got {n}")
    return float(special.gammaln(n + 1))


def complex_mv_ln_gamma(m: int, a: float) -> float:
    """
    Log of the complex multivariate gamma function.

    ln Γ̃_m(a) = m(m-1)/2 · ln π + Σ_{j=1..m} ln Γ(a-j+1)

    Args:
        m: Matrix dimension (>= 1)
        a: Argument, must exceed m - 1

    Returns:
        float: ln Γ̃_m(a)
    """
    if m < 1:
        raise DomainError(f"complex_mv_ln_gamma requires m >= 1, got {m}")
    if not a > m - 1:
        raise DomainError(f"complex_mv_ln_gamma requires a > m-1 = {m - 1}, got {a}")
    terms = [0.5 * m * (m - 1) * math.log(math.pi)]
    terms.extend(float(special.gammaln(a - j + 1)) for j in range(1, m + 1))
    return math.fsum(terms)


def pochhammer_ln(a: float, k: int) -> PochhammerLog:
    """
    Sign and log-magnitude of the rising factorial (a)_k = a(a+1)...(a+k-1).

    Args:
        a: Any real base
        k: Nonnegative length

    Returns:
        PochhammerLog: ``is_zero`` is set when a factor vanishes exactly,
        that is when ``a`` is a nonpositive integer with |a| < k
    """
    if k < 0 or int(k) != k:
        raise DomainError(f"pochhammer_ln requires a nonnegative integer k, got {k}")
    k = int(k)
    if k == 0:
        return PochhammerLog(1, 0.0)
    if a <= 0 and float(a).is_integer() and -a < k:
        return PochhammerLog(0, -math.inf, True)

    if k <= _DIRECT_POCHHAMMER_TERMS:
        factors = a + np.arange(k, dtype=float)
        negatives = int(np.count_nonzero(factors < 0))
        sign = -1 if negatives % 2 else 1
        return PochhammerLog(sign, math.fsum(np.log(np.abs(factors))))

    sign = int(special.gammasgn(a + k) * special.gammasgn(a))
    return PochhammerLog(sign, float(special.gammaln(a + k) - special.gammaln(a)))


def ln_beta(a: float, b: float) -> float:
    """ln B(a, b) for positive arguments."""
    if not (a > 0 and b > 0):
        raise DomainError(f"ln_beta requires a, b > 0, got ({a}, {b})")
    return float(special.betaln(a, b))
