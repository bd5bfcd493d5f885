"""
Adaptive quadrature primitives.

Both entry points wrap QUADPACK (``scipy.integrate.quad``) and translate its
diagnostics into the library's error types. The semi-infinite integral is
mapped onto (0, 1) with y = x / (1 - x) before integrating, which keeps the
polynomially decaying integrands of the c.d.f. formulas well resolved near
both ends.
"""

import logging
import math
from typing import Callable, NamedTuple, Optional, Sequence

import numpy as np
from scipy import integrate

from .budget import DEFAULT_BUDGET, AccuracyBudget
from .exceptions import DomainError, NonConvergenceError

logger = logging.getLogger(__name__)

_MIN_EPSREL = 50 * np.finfo(float).eps
# QUADPACK warnings are tolerated while the reported error stays within
# this multiple of the requested tolerance.
_WARNING_SLACK = 100.0


class QuadratureResult(NamedTuple):
    """Value of an integral and the error estimate reported for it."""

    value: float
    err_estimate: float


def integrate_interval(f: Callable[[float], float], a: float, b: float,
                       budget: AccuracyBudget = DEFAULT_BUDGET,
                       points: Optional[Sequence[float]] = None) -> QuadratureResult:
    """
    Integrate ``f`` over the finite interval [a, b].

    Args:
        f: Integrand, called with a float
        a: Lower limit
        b: Upper limit (> a)
        budget: Accuracy budget; ``max_quad_refinements`` caps the number
            of subintervals
        points: Optional interior break points

    Returns:
        QuadratureResult: value and error estimate
    """
    if not (math.isfinite(a) and math.isfinite(b)) or not b > a:
        raise DomainError(f"integrate_interval requires finite a < b, got [{a}, {b}]")

    interior = None
    if points:
        interior = sorted(p for p in points if a < p < b)
        interior = interior or None

    epsrel = max(budget.rel_tol, _MIN_EPSREL)
    result = integrate.quad(
        f, a, b,
        epsabs=budget.abs_tol,
        epsrel=epsrel,
        limit=int(budget.max_quad_refinements),
        points=interior,
        full_output=1,
    )
    value, err = float(result[0]), float(result[1])

    if not (math.isfinite(value) and math.isfinite(err)):
        raise NonConvergenceError(
            f"quadrature produced a non-finite value on [{a}, {b}]",
            partial_value=value, err_estimate=err,
        )

    if len(result) > 3:
        message = result[3]
        requested = max(budget.abs_tol, epsrel * abs(value))
        if err > _WARNING_SLACK * requested:
            raise NonConvergenceError(
                f"quadrature did not converge on [{a}, {b}]: {message}",
                partial_value=value, err_estimate=err,
            )
        logger.debug(f"Accepted QUADPACK warning (err={err:.3e}): {message}")

    return QuadratureResult(value, err)


def integrate_semi_infinite(f: Callable[[float], float],
                            budget: AccuracyBudget = DEFAULT_BUDGET,
                            breakpoints: Optional[Sequence[float]] = None) -> QuadratureResult:
    """
    Integrate ``f`` over (0, ∞).

    The substitution y = x/(1-x) maps the half line onto (0, 1), where
    adaptive subdivision is applied.

    Args:
        f: Integrand on (0, ∞)
        budget: Accuracy budget
        breakpoints: Optional y-locations where the integrand changes
            scale; they are mapped to x and passed to QUADPACK

    Returns:
        QuadratureResult: value and error estimate
    """

    def mapped(x: float) -> float:
        one_minus = 1.0 - x
        if one_minus <= 0.0:
            return 0.0
        return f(x / one_minus) / (one_minus * one_minus)

    points = None
    if breakpoints:
        points = [y / (1.0 + y) for y in breakpoints if y > 0 and math.isfinite(y)]
    return integrate_interval(mapped, 0.0, 1.0, budget, points=points)
