"""
Gauss and Appell hypergeometric functions for real arguments.

Gauss 2F1 is summed as a power series up to z = 0.9. Above that the
series is tried with a short cap before scipy and the Euler integral,
and z = 1 uses Gauss's summation theorem. Negative arguments are first
moved into (0, 1) by a Pfaff transformation. Appell F1 is summed as a
double series near the origin (as a single series of 2F1 values) and
evaluated through its one-dimensional Euler integral elsewhere.
"""

import logging
import math
from dataclasses import replace
from typing import Optional

import numpy as np
from scipy import special

from .budget import DEFAULT_BUDGET, AccuracyBudget
from .exceptions import DomainError, NonConvergenceError
from .quadrature import integrate_interval

logger = logging.getLogger(__name__)

SERIES_RADIUS = 0.7
# plain 2F1 power series up to here
CONTINUATION_START = 0.9
# above CONTINUATION_START the series is still tried first with this many terms
_NEAR_ONE_TERMS = 4096
_SERIES_GUARD = 1e-6
_EPS = float(np.finfo(float).eps)
_CHUNK = 512


def _nonpositive_integer(value: float) -> bool:
    return value <= 0 and float(value).is_integer()


def _terminating_degree(a: float, b: float) -> Optional[int]:
    degrees = [int(-v) for v in (a, b) if _nonpositive_integer(v)]
    return min(degrees) if degrees else None


def _sum_series(a: float, b: float, c: float, z: float, budget: AccuracyBudget,
                degree: Optional[int] = None) -> float:
    """
    Sum Σ (a)_n (b)_n / ((c)_n n!) z^n in vectorised chunks.

    With ``degree`` set the polynomial is summed exactly up to that power.
    Otherwise summation stops once the geometric bound on the remaining tail
    falls below ``1e-6 * (abs_tol + rel_tol * |partial sum|)``, floored at
    machine precision, at two consecutive terms.
    """
    chunks = [np.array([1.0])]
    last_term = 1.0
    partial = 1.0
    previous_small = False
    start = 0
    limit = degree if degree is not None else budget.max_terms

    while start < limit:
        size = min(_CHUNK, limit - start)
        n = np.arange(start, start + size, dtype=float)
        ratios = (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
        terms = last_term * np.cumprod(ratios)
        if not np.all(np.isfinite(terms)):
            raise NonConvergenceError(
                f"2F1({a}, {b}; {c}; {z}) series overflowed after {start} terms"
            )

        if degree is None:
            partials = partial + np.cumsum(terms)
            rate = np.maximum(np.abs(ratios), abs(z))
            with np.errstate(divide="ignore", invalid="ignore"):
                tail = np.where(rate < 1.0, np.abs(terms) * rate / (1.0 - rate), np.inf)
            target = np.maximum(_SERIES_GUARD * (budget.abs_tol + budget.rel_tol * np.abs(partials)),
                                _EPS * np.abs(partials))
            small = tail < target
            preceding = np.concatenate(([previous_small], small[:-1]))
            stops = np.flatnonzero(small & preceding)
            if stops.size:
                chunks.append(terms[:stops[0] + 1])
                return math.fsum(np.concatenate(chunks))
            partial = float(partials[-1])
            previous_small = bool(small[-1])

        chunks.append(terms)
        last_term = float(terms[-1])
        start += size

    if degree is not None:
        return math.fsum(np.concatenate(chunks))

    total = math.fsum(np.concatenate(chunks))
    raise NonConvergenceError(
        f"2F1({a}, {b}; {c}; {z}) did not converge within {budget.max_terms} terms",
        partial_value=total, err_estimate=abs(last_term),
    )


def gauss_2f1(a: float, b: float, c: float, z: float,
              budget: AccuracyBudget = DEFAULT_BUDGET) -> float:
    """
    Gauss hypergeometric function 2F1(a, b; c; z) for real z <= 1.

    Terminating series (``a`` or ``b`` a nonpositive integer) are summed
    exactly for any ``z``. For z < 0 the Pfaff transformation
    2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)) is applied, keeping
    the smaller of ``a`` and ``b`` so that the transformed series decays.
    Above z = 0.9 see ``_near_one``. At z = 1 Gauss's summation theorem
    applies when c - a - b > 0.

    Args:
        a, b, c: Parameters; ``c`` must not be a nonpositive integer unless
            the series terminates before the pole
        z: Argument
        budget: Accuracy budget

    Returns:
        float: 2F1(a, b; c; z)
    """
    degree = _terminating_degree(a, b)

    if _nonpositive_integer(c) and (degree is None or degree > -c):
        raise DomainError(f"2F1 undefined: c = {c} is a nonpositive integer")
    if z == 0:
        return 1.0
    if degree is not None:
        return _sum_series(a, b, c, z, budget, degree=degree)
    if z == 1:
        return _gauss_sum_at_one(a, b, c)
    if z > 1:
        raise DomainError(f"2F1 non-terminating series requires z <= 1, got z = {z}")

    if z < 0:
        keep, other = (a, b) if a <= b else (b, a)
        w = z / (z - 1.0)
        prefactor = math.exp(-keep * math.log1p(-z))
        return prefactor * gauss_2f1(keep, c - other, c, w, budget)

    if z > CONTINUATION_START:
        return _near_one(a, b, c, z, budget)

    return _sum_series(a, b, c, z, budget)


def _gauss_sum_at_one(a: float, b: float, c: float) -> float:
    """2F1(a, b; c; 1) = Γ(c)Γ(c-a-b) / (Γ(c-a)Γ(c-b)) for c - a - b > 0."""
    if not c - a - b > 0:
        raise DomainError(f"2F1({a}, {b}; {c}; 1) diverges: c - a - b = {c - a - b} <= 0")
    if _nonpositive_integer(c - a) or _nonpositive_integer(c - b):
        return 0.0
    sign = (special.gammasgn(c) * special.gammasgn(c - a - b)
            * special.gammasgn(c - a) * special.gammasgn(c - b))
    log_value = (special.gammaln(c) + special.gammaln(c - a - b)
                 - special.gammaln(c - a) - special.gammaln(c - b))
    return float(sign * math.exp(log_value))


def _euler_2f1(a: float, b: float, c: float, z: float, budget: AccuracyBudget) -> float:
    # Γ(c)/(Γ(b)Γ(c-b)) ∫ u^(b-1) (1-u)^(c-b-1) (1-zu)^(-a) du with c > b > 0
    if not c > b > 0:
        a, b = b, a
    if not c > b > 0:
        raise NonConvergenceError(f"2F1({a}, {b}; {c}; {z}) has no convergent Euler integral")
    log_prefactor = float(special.gammaln(c) - special.gammaln(b) - special.gammaln(c - b))

    def integrand(u: float) -> float:
        log_value = ((b - 1.0) * math.log(u) + (c - b - 1.0) * math.log1p(-u)
                     - a * math.log1p(-z * u))
        return math.exp(log_value + log_prefactor)

    return integrate_interval(integrand, 0.0, 1.0, budget).value


def _near_one(a: float, b: float, c: float, z: float, budget: AccuracyBudget) -> float:
    """
    2F1 for 0.9 < z < 1.

    The power series is tried first with a short term cap, which covers
    large ``c`` where terms vanish long before the geometric rate matters.
    Then ``scipy.special.hyp2f1``, and the Euler integral when scipy
    overflows.
    """
    short = replace(budget, max_terms=min(budget.max_terms, _NEAR_ONE_TERMS))
    try:
        return _sum_series(a, b, c, z, short)
    except NonConvergenceError:
        pass

    value = float(special.hyp2f1(a, b, c, z))
    if math.isfinite(value):
        return value

    logger.debug(f"scipy hyp2f1({a}, {b}; {c}; {z}) = {value}; using the Euler integral")
    value = _euler_2f1(a, b, c, z, budget)
    if not math.isfinite(value):
        raise NonConvergenceError(f"2F1({a}, {b}; {c}; {z}) is not finite near z = 1")
    return value


def _appell_series(a: float, b1: float, b2: float, c: float, x: float, y: float,
                   budget: AccuracyBudget) -> float:
    # F1 = Σ_i (a)_i (b1)_i / ((c)_i i!) x^i · 2F1(a+i, b2; c+i; y)
    terms = []
    coefficient = 1.0
    partial = 0.0
    previous_small = False
    for i in range(budget.max_terms):
        if coefficient == 0.0:
            return math.fsum(terms)
        term = coefficient * gauss_2f1(a + i, b2, c + i, y, budget)
        terms.append(term)
        partial += term
        small = abs(term) < budget.tolerance(partial)
        if small and previous_small:
            return math.fsum(terms)
        previous_small = small
        coefficient *= (a + i) * (b1 + i) / ((c + i) * (i + 1.0)) * x

    raise NonConvergenceError(
        f"F1 double series did not converge within {budget.max_terms} terms",
        partial_value=math.fsum(terms),
    )


def _check_euler_singularity(name: str, arg: float, exponent: float, tail: float):
    if _nonpositive_integer(exponent) or arg < 1:
        return
    if arg > 1:
        raise DomainError(
            f"F1 Euler integrand is singular at u = {1.0 / arg:.6g} inside (0,1) "
            f"({name} = {arg}, exponent {exponent})"
        )
    if arg == 1 and tail - exponent <= 0:
        raise DomainError(f"F1 Euler integral diverges at u = 1 ({name} = 1)")


def _appell_integral(a: float, b1: float, b2: float, c: float, x: float, y: float,
                     budget: AccuracyBudget) -> float:
    if not c > a > 0:
        raise DomainError(f"F1 Euler integral requires c > a > 0, got a = {a}, c = {c}")
    _check_euler_singularity("x", x, b1, c - a)
    _check_euler_singularity("y", y, b2, c - a)

    log_prefactor = float(special.gammaln(c) - special.gammaln(a) - special.gammaln(c - a))

    def integrand(u: float) -> float:
        log_value = (a - 1.0) * math.log(u) + (c - a - 1.0) * math.log1p(-u)
        if b1 != 0:
            log_value -= b1 * math.log1p(-u * x)
        if b2 != 0:
            log_value -= b2 * math.log1p(-u * y)
        return math.exp(log_value + log_prefactor)

    result = integrate_interval(integrand, 0.0, 1.0, budget)
    return result.value


def appell_f1(a: float, b1: float, b2: float, c: float, x: float, y: float,
              budget: AccuracyBudget = DEFAULT_BUDGET, method: Optional[str] = None) -> float:
    """
    Appell hypergeometric function F1(a; b1, b2; c; x, y) for real arguments.

    Reductions to 2F1 are applied first (vanishing exponent or argument, and
    equal arguments). Otherwise the double series is used when
    max(|x|, |y|) <= 0.7 and the Euler integral
    Γ(c)/(Γ(a)Γ(c-a)) ∫ u^(a-1) (1-u)^(c-a-1) (1-ux)^(-b1) (1-uy)^(-b2) du
    elsewhere.

    Args:
        a, b1, b2, c: Parameters
        x, y: Arguments
        budget: Accuracy budget
        method: Force ``"series"`` or ``"integral"``; automatic when None

    Returns:
        float: F1 value

    Raises:
        DomainError: when the Euler integrand has a singularity inside (0, 1)
    """
    if method not in (None, "series", "integral"):
        raise DomainError(f"unknown F1 evaluation method: {method}")

    if method is None:
        if b1 == 0 or x == 0:
            return gauss_2f1(a, b2, c, y, budget)
        if b2 == 0 or y == 0:
            return gauss_2f1(a, b1, c, x, budget)
        if x == y:
            return gauss_2f1(a, b1 + b2, c, x, budget)
        method = "series" if max(abs(x), abs(y)) <= SERIES_RADIUS else "integral"

    if method == "series":
        if not (abs(x) < 1 and abs(y) < 1):
            raise DomainError(f"F1 double series requires |x|, |y| < 1, got ({x}, {y})")
        return _appell_series(a, b1, b2, c, x, y, budget)
    return _appell_integral(a, b1, b2, c, x, y, budget)
