"""
Exact SCN c.d.f. under H0.

Three closed forms, from most to least general:

1. cdf_h0_theorem1 - any (m, n, p): a y-integral over a signed sum of
   grouped determinant coefficients
2. cdf_h0_corollary1 - n = m: the y-integral is done analytically and
   leaves a finite sum of Beta·2F1 terms
3. cdf_h0_corollary2 - n = p = m: a single Beta·2F1 term

All three are evaluated in log space. 2F1(a, b; c; 1 − t) is always
rewritten with the Pfaff transformation as t^{-a}·2F1(a, c − b; c; 1 − 1/t),
whose argument stays in [0, 1).
"""

import logging
import math

import numpy as np

from matrand.types import ProblemDims
from specfun.budget import DEFAULT_BUDGET, AccuracyBudget
from specfun.exceptions import DomainError, NotEvaluableError
from specfun.gamma import ln_beta
from specfun.hypergeometric import gauss_2f1
from specfun.quadrature import integrate_semi_infinite
from specfun.summation import signed_exp_sum

from .constants import null_cdf_ledger
from .types import CdfEvaluation, Method

logger = logging.getLogger(__name__)

# exp() overflows just above 709
_LOG_OVERFLOW = 700.0


def _check_threshold(t: float):
    if not math.isfinite(t) or not t > 1.0:
        raise DomainError(f"t must be a finite value > 1, got {t}")


def corollary1_applies(dims: ProblemDims) -> bool:
    """True when n = m and (p − m)(p + m − 1) < 2mp."""
    p, m = dims.p, dims.m
    return dims.alpha == 0 and (p - m) * (p + m - 1) < 2 * m * p


def theorem1_converges(dims: ProblemDims) -> bool:
    """
    True when every grouped y-integral of the null c.d.f. converges on its own.

    Each group needs m² + m·β > α(α−1)/2 at y → 0 and m² + m·α > β(β−1)/2 at y → ∞.
    """
    m, alpha, beta = dims.m, dims.alpha, dims.beta
    return 2 * (m * m + m * beta) > alpha * (alpha - 1) and 2 * (m * m + m * alpha) > beta * (beta - 1)


def cdf_h0_corollary2(m: int, t: float, budget: AccuracyBudget = DEFAULT_BUDGET) -> CdfEvaluation:
    """
    F(t) for n = p = m.

    F(t) = m²·B(m², m²)·(t − 1)^{m²−1}·2F1(m², m² − 1; 2m²; 1 − t)

    Args:
        m: Number of sensors (n = p = m)
        t: Threshold (> 1)
        budget: Accuracy budget

    Returns:
        CdfEvaluation: value with method Corollary2
    """
    _check_threshold(t)
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    if m == 1:
        return CdfEvaluation(t, 1.0, Method.COROLLARY2, 0.0)
    q = m * m
    shrink = -math.expm1(-math.log(t))
    series = gauss_2f1(q - 1, q, 2 * q, shrink, budget)
    log_value = (2.0 * math.log(m) + ln_beta(q, q)
                 + (q - 1) * math.log(shrink) + math.log(series))
    value = math.exp(log_value)
    return CdfEvaluation(t, value, Method.COROLLARY2, budget.rel_tol * value)


def cdf_h0_corollary1(dims: ProblemDims, t: float, budget: AccuracyBudget = DEFAULT_BUDGET) -> CdfEvaluation:
    """
    F(t) for n = m, as a finite signed sum of Beta·2F1 terms.

    With ν = m² + mβ and E = ν − β − 1, group J contributes

        C₀·C_J·(1 − 1/t)^{E−J}·B(ν, ν − β − J)·2F1(E, ν − β − J; 2ν − β − J; 1 − 1/t)

    Raises:
        DomainError: when n ≠ m or the convergence constraint
            (p − m)(p + m − 1) < 2mp fails
    """
    _check_threshold(t)
    if dims.alpha != 0:
        raise DomainError(f"closed Beta-2F1 sum needs n = m, got {dims}")
    if dims.beta == 0:
        return cdf_h0_corollary2(dims.m, t, budget)
    if not corollary1_applies(dims):
        raise DomainError(f"(p - m)(p + m - 1) < 2mp fails for {dims}; use the y-integral form")

    ledger = null_cdf_ledger(dims)
    nu, beta = dims.nu, dims.beta
    exponent = ledger.exponent
    shrink = -math.expm1(-math.log(t))
    log_shrink = math.log(shrink)

    signs, logs = [], []
    for j1, coefficient in zip(ledger.signal_sums, ledger.coefficients):
        if coefficient == 0.0:
            continue
        j1 = int(j1)
        series = gauss_2f1(exponent, nu - beta - j1, 2 * nu - beta - j1, shrink, budget)
        signs.append(ledger.sign_c0 * math.copysign(1.0, coefficient) * math.copysign(1.0, series))
        logs.append(ledger.log_c0 + math.log(abs(coefficient))
                    + (exponent - j1) * log_shrink
                    + ln_beta(nu, nu - beta - j1)
                    + math.log(abs(series)))

    total = signed_exp_sum(signs, logs)
    err = (budget.rel_tol + len(logs) * np.finfo(float).eps) * total.abs_sum
    logger.debug(f"Corollary1 {dims} t={t}: {len(logs)} terms, cancellation ratio "
                 f"{total.abs_sum / max(abs(total.value), 1e-300):.3e}")
    return CdfEvaluation(t, total.value, Method.COROLLARY1, err)


def cdf_h0_reciprocal(dims: ProblemDims, t: float, budget: AccuracyBudget = DEFAULT_BUDGET) -> CdfEvaluation:
    """
    F(t) for p = m < n through the reciprocal symmetry F^{(α,β)} = F^{(β,α)}.

    Swapping the roles of n and p maps the problem onto the n = m family.
    """
    if dims.beta != 0:
        raise DomainError(f"reciprocal form needs p = m, got {dims}")
    return cdf_h0_corollary1(dims.swapped(), t, budget)


def cdf_h0_theorem1(dims: ProblemDims, t: float, budget: AccuracyBudget = DEFAULT_BUDGET) -> CdfEvaluation:
    """
    F(t) for general (m, n, p) with α + β >= 1.

    The integrand is a signed sum over (J₁, J₂) groups:

        C₀·C_J·(−1)^{J₂}·t^{J₁}(t−1)^{E−J₁−J₂}·y^{β+E−J₂}
            ·(1+y)^{−(α+β+2+E−J₁−J₂)}·(1+ty)^{−E}

    and is integrated over y ∈ (0, ∞) with breakpoints at 1/t and 1.

    Args:
        dims: Problem dimensions (not both n = m and p = m)
        t: Threshold (> 1)
        budget: Accuracy budget

    Returns:
        CdfEvaluation: value with method Theorem1

    Raises:
        NotEvaluableError: when a group integral diverges on its own, the
            tuple count is too large, or the integrand leaves the float range
    """
    _check_threshold(t)
    if dims.alpha + dims.beta == 0:
        raise DomainError("n = p = m has the single-term closed form; use cdf_h0_corollary2")
    if not theorem1_converges(dims):
        raise NotEvaluableError(
            f"grouped y-integrals diverge for {dims}",
            diagnostics={"m": dims.m, "alpha": dims.alpha, "beta": dims.beta},
        )

    ledger = null_cdf_ledger(dims)
    live = ledger.coefficients != 0.0
    j1 = ledger.signal_sums[live].astype(float)
    j2 = ledger.noise_sums[live].astype(float)
    coefficients = ledger.coefficients[live]
    exponent = ledger.exponent
    width = dims.alpha + dims.beta

    signs = ledger.sign_c0 * np.sign(coefficients) * np.where(j2 % 2 == 0, 1.0, -1.0)
    base = (ledger.log_c0 + np.log(np.abs(coefficients))
            + j1 * math.log(t) + (exponent - j1 - j2) * math.log(t - 1.0))
    y_power = dims.beta + exponent - j2
    onep_power = -(width + 2 + exponent - j1 - j2)

    def integrand(y: float) -> float:
        logs = base + y_power * math.log(y) + onep_power * math.log1p(y) - exponent * math.log1p(t * y)
        peak = float(np.max(logs))
        if peak > _LOG_OVERFLOW:
            raise NotEvaluableError(
                f"integrand terms overflow at y={y:.3e} for {dims}, t={t}",
                diagnostics={"y": y, "t": t, "log_peak": peak},
            )
        return signed_exp_sum(signs, logs).value

    result = integrate_semi_infinite(integrand, budget, breakpoints=[1.0 / t, 1.0])
    return CdfEvaluation(t, result.value, Method.THEOREM1, result.err_estimate)
