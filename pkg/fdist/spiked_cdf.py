"""
Exact SCN c.d.f. under the rank-one spiked alternative with m = n = p.

F(t; γ) = I^A + I^B where, with m̃ = m² − m + 1,

    I^A = (−1)^{m−1}·m / (γ^{m−1}(1+γ)^{(m−1)²}) · (1 − 1/t)^{m̃−1} · B(m̃, m̃)
          · F1(m̃; m̃−1, (m−1)²; 2m̃; 1 − 1/(t(γ+1)), γ/(γ+1))

    I^B = Σ_{j=0}^{m−2} A_j (t−1)^{m̃−1+j} S_j

A_j is a finite alternating sum of factorial ratios and S_j an infinite
series over ℓ of Beta·F1 terms with positive summands. Only m <= 2 is
evaluated; for m >= 3 the summed I^B leaves [0, 1] and the dispatcher
uses Monte Carlo.
"""

import logging
import math

from specfun.budget import DEFAULT_BUDGET, AccuracyBudget
from specfun.exceptions import DomainError, NonConvergenceError, NotEvaluableError
from specfun.gamma import ln_beta, log_factorial, pochhammer_ln
from specfun.hypergeometric import appell_f1
from specfun.summation import signed_exp_sum

from .types import CdfEvaluation, Method

logger = logging.getLogger(__name__)

# 16 decades below the running maximum
_SERIES_DROP = 16.0 * math.log(10.0)
_MAX_SERIES_TERMS = 10_000


def theorem2_evaluable(m: int) -> bool:
    """True when the spiked closed form is used for m sensors."""
    return m <= 2


def _appell_log(a, b1, b2, c, x, y, budget: AccuracyBudget, context: dict) -> float:
    try:
        value = appell_f1(a, b1, b2, c, x, y, budget)
    except DomainError as exc:
        raise NotEvaluableError(f"spiked closed form not evaluable: {exc}", diagnostics=context) from exc
    if not value > 0:
        raise NotEvaluableError(f"Appell F1 returned {value} where a positive value was expected",
                                diagnostics=context)
    return math.log(value)


def _outer_coefficient(m: int, j: int):
    """Sign and log-magnitude of A_j = m(j+1) Σ_k (−1)^k (m+k)! / (k! (k+2+j)! (m−k−2−j)!)."""
    signs, logs = [], []
    for k in range(m - 1 - j):
        signs.append(-1.0 if k % 2 else 1.0)
        logs.append(log_factorial(m + k) - log_factorial(k)
                    - log_factorial(k + 2 + j) - log_factorial(m - k - 2 - j))
    total = signed_exp_sum(signs, logs)
    if total.value == 0.0:
        return 0.0, -math.inf
    return math.copysign(1.0, total.value), math.log(m * (j + 1)) + math.log(abs(total.value))


def _inner_series_logs(m: int, j: int, gamma: float, t: float, budget: AccuracyBudget):
    """Log-terms of S_j, truncated once a term falls 16 decades below the largest one."""
    m_tilde = m * m - m + 1
    a0 = m_tilde + j
    x = t - 1.0
    y = 1.0 - t / (gamma + 1.0)
    log_gamma, log_one_plus = math.log(gamma), math.log1p(gamma)
    logs = []
    peak = -math.inf
    for ell in range(_MAX_SERIES_TERMS):
        context = {"m": m, "gamma": gamma, "t": t, "j": j, "l": ell, "x": x, "y": y}
        log_term = (pochhammer_ln(m - 1, ell).ln_magnitude - log_factorial(ell)
                    + (ell + j - m + 1) * log_gamma - (ell + j + 1) * log_one_plus
                    + ln_beta(a0, a0 + ell)
                    + _appell_log(a0 + ell, m_tilde - 3, j + 2, 2 * a0 + ell, x, y, budget, context))
        logs.append(log_term)
        peak = max(peak, log_term)
        if ell > 0 and log_term < peak - _SERIES_DROP:
            return logs
    raise NonConvergenceError(
        f"spiked inner series (j={j}) did not settle within {_MAX_SERIES_TERMS} terms "
        f"for m={m}, gamma={gamma}, t={t}"
    )


def cdf_h1_theorem2(m: int, gamma: float, t: float,
                    budget: AccuracyBudget = DEFAULT_BUDGET) -> CdfEvaluation:
    """
    F(t; γ) = Pr{κ² <= t} under H1 for m = n = p.

    Args:
        m: Number of sensors (n = p = m)
        gamma: Spike strength γ > 0
        t: Threshold (> 1)
        budget: Accuracy budget

    Returns:
        CdfEvaluation: value with method Theorem2

    Raises:
        NotEvaluableError: for m >= 3
        NonConvergenceError: when an inner series does not settle or the
            result leaves [0, 1] by more than its error estimate
    """
    if not math.isfinite(t) or not t > 1.0:
        raise DomainError(f"t must be a finite value > 1, got {t}")
    if not math.isfinite(gamma) or not gamma > 0:
        raise DomainError(f"spike strength must be positive and finite, got {gamma}")
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    if m == 1:
        return CdfEvaluation(t, 1.0, Method.THEOREM2, 0.0)
    if not theorem2_evaluable(m):
        raise NotEvaluableError(
            f"spiked closed form is only evaluated for m <= 2, got m = {m}",
            diagnostics={"m": m, "gamma": gamma, "t": t},
        )

    m_tilde = m * m - m + 1
    log_gamma, log_one_plus = math.log(gamma), math.log1p(gamma)
    shrink = -math.expm1(-math.log(t))

    signs = [-1.0 if (m - 1) % 2 else 1.0]
    logs = [
        math.log(m) - (m - 1) * log_gamma - (m - 1) ** 2 * log_one_plus
        + (m_tilde - 1) * math.log(shrink) + ln_beta(m_tilde, m_tilde)
        + _appell_log(m_tilde, m_tilde - 1, (m - 1) ** 2, 2 * m_tilde,
                      -math.expm1(-math.log(t * (gamma + 1.0))), gamma / (gamma + 1.0), budget,
                      {"m": m, "gamma": gamma, "t": t, "part": "A"})
    ]

    log_gap = math.log(t - 1.0)
    for j in range(m - 1):
        sign, log_outer = _outer_coefficient(m, j)
        if sign == 0.0:
            continue
        inner = _inner_series_logs(m, j, gamma, t, budget)
        shift = log_outer + (m_tilde - 1 + j) * log_gap
        signs.extend([sign] * len(inner))
        logs.extend(shift + value for value in inner)
        logger.debug(f"Theorem2 m={m} gamma={gamma} t={t}: j={j} used {len(inner)} series terms")

    total = signed_exp_sum(signs, logs)
    err = budget.rel_tol * total.abs_sum
    slack = err + budget.abs_tol
    if not -slack <= total.value <= 1.0 + slack:
        raise NonConvergenceError(
            f"spiked closed form left [0, 1]: F({t}; {gamma}) = {total.value} for m = {m}",
            partial_value=total.value, err_estimate=err,
        )
    return CdfEvaluation(t, min(max(total.value, 0.0), 1.0), Method.THEOREM2, err)
