"""
False-alarm and detection probabilities of the SCN detector.

The detector declares a signal when κ² > μ_th. Under H0 the SCN law does
not depend on the noise covariance, so the threshold for a target false
alarm rate depends on (m, n, p, a) only.
"""

import logging
import math
from typing import List, Optional, Sequence

import numpy as np
from scipy import optimize

from fdist.dispatch import DEFAULT_DRAWS, DEFAULT_SEED, evaluate_cdf
from fdist.types import Method
from matrand.batch import BatchSampler, Seed
from matrand.types import ProblemDims, SpikeParams
from specfun.budget import DEFAULT_BUDGET, AccuracyBudget
from specfun.exceptions import DomainError, NonConvergenceError

from .types import DetectorOperatingPoint, ProbabilityEstimate

logger = logging.getLogger(__name__)

EXACT = "exact"
MONTE_CARLO = "monte_carlo"
_BRACKET_LIMIT = 1e12


def _check_threshold(mu_th: float):
    if not math.isfinite(mu_th) or not mu_th > 1.0:
        raise DomainError(f"threshold must be a finite value > 1, got {mu_th}")


def _check_rate(alpha_rate: float):
    if not 0.0 < alpha_rate < 1.0:
        raise DomainError(f"target false alarm rate must lie in (0, 1), got {alpha_rate}")


def false_alarm_rate(dims: ProblemDims, mu_th: float,
                     budget: AccuracyBudget = DEFAULT_BUDGET, **fallback) -> ProbabilityEstimate:
    """
    P_F(μ_th) = 1 − F(μ_th; H0).

    Args:
        dims: Problem dimensions
        mu_th: Threshold (> 1)
        budget: Accuracy budget of the exact c.d.f.
        **fallback: Monte Carlo settings forwarded to the dispatcher
            (``draws``, ``seed``, ``threads``, ``allow_fallback``)

    Returns:
        ProbabilityEstimate: false alarm probability
    """
    _check_threshold(mu_th)
    result = evaluate_cdf(dims, mu_th, budget=budget, **fallback)
    return ProbabilityEstimate(1.0 - result.value, result.err_estimate, result.method)


def empirical_threshold(values: np.ndarray, alpha_rate: float) -> float:
    """
    Lower (1 − a) order statistic of ``values``.

    With distinct values exactly ⌈a·(N − 1)⌉ draws exceed it, matching the
    strict comparison of the detector.
    """
    _check_rate(alpha_rate)
    return float(np.quantile(values, 1.0 - alpha_rate, method="lower"))


def _exact_threshold(dims: ProblemDims, alpha_rate: float, budget: AccuracyBudget) -> float:
    def excess(mu: float) -> float:
        if mu <= 1.0:
            return 1.0 - alpha_rate
        return false_alarm_rate(dims, mu, budget, allow_fallback=False).value - alpha_rate

    lower, upper = 1.0, 2.0
    while excess(upper) > 0.0:
        lower, upper = upper, 1.0 + 2.0 * (upper - 1.0)
        if upper > _BRACKET_LIMIT:
            raise NonConvergenceError(
                f"no threshold bracket below {_BRACKET_LIMIT:g} for P_F = {alpha_rate} and {dims}"
            )

    return float(optimize.brentq(excess, lower, upper, xtol=1e-12, rtol=1e-10, maxiter=200))


def threshold_for_alpha(dims: ProblemDims, alpha_rate: float,
                        budget: AccuracyBudget = DEFAULT_BUDGET, allow_fallback: bool = False,
                        draws: int = DEFAULT_DRAWS, seed: Seed = DEFAULT_SEED,
                        threads: Optional[int] = None) -> float:
    """
    Threshold μ_th with P_F(μ_th) = alpha_rate.

    The root of the exact null c.d.f. is bracketed by doubling the distance
    of the upper end from 1 and then refined with Brent's method. When the
    exact c.d.f. is not evaluable for the shape and ``allow_fallback`` is
    set, the threshold is the empirical (1 − a) quantile of one batch of
    null SCN draws instead.

    Args:
        dims: Problem dimensions
        alpha_rate: Target false alarm rate in (0, 1)
        budget: Accuracy budget of the exact c.d.f.
        allow_fallback: Use Monte Carlo when the exact c.d.f. fails
        draws, seed, threads: Monte Carlo settings of the fallback

    Raises:
        NonConvergenceError: when no bracket is found below 1e12, or the
            exact c.d.f. fails and ``allow_fallback`` is False
    """
    _check_rate(alpha_rate)
    try:
        mu_th = _exact_threshold(dims, alpha_rate, budget)
    except NonConvergenceError as exc:
        if not allow_fallback:
            raise
        logger.warning(f"exact threshold failed for {dims} ({exc}); using Monte Carlo")
        scn_values = BatchSampler(dims, threads=threads).scn(draws, seed)
        mu_th = empirical_threshold(scn_values, alpha_rate)

    logger.debug(f"Threshold for P_F={alpha_rate} at {dims}: {mu_th:.12g}")
    return mu_th


def _empirical_exceedance(scn_values: np.ndarray, mu_th: float, method: Method = Method.MONTE_CARLO
                          ) -> ProbabilityEstimate:
    draws = scn_values.size
    rate = float(np.count_nonzero(scn_values > mu_th)) / draws
    return ProbabilityEstimate(rate, math.sqrt(rate * (1.0 - rate) / draws), method)


def detection_probability(dims: ProblemDims, gamma: float, mu_th: float, method: str = EXACT,
                          draws: int = DEFAULT_DRAWS, seed: Seed = DEFAULT_SEED,
                          threads: Optional[int] = None,
                          budget: AccuracyBudget = DEFAULT_BUDGET) -> ProbabilityEstimate:
    """
    P_D(γ, μ_th) = 1 − F(μ_th; H1).

    Args:
        dims: Problem dimensions
        gamma: Spike strength γ >= 0; γ = 0 gives the false alarm rate
        mu_th: Threshold (> 1)
        method: ``"exact"`` (m = n = p only) or ``"monte_carlo"``
        draws, seed, threads: Monte Carlo settings
        budget: Accuracy budget of the exact c.d.f.

    Returns:
        ProbabilityEstimate: detection probability
    """
    _check_threshold(mu_th)
    if not gamma >= 0 or not math.isfinite(gamma):
        raise DomainError(f"spike strength must be finite and >= 0, got {gamma}")
    spike = SpikeParams.along_first_axis(dims.m, gamma)

    if method == MONTE_CARLO:
        scn_values = BatchSampler(dims, spike=spike, threads=threads).scn(draws, seed)
        return _empirical_exceedance(scn_values, mu_th)
    if method != EXACT:
        raise DomainError(f"unknown detection method {method!r}; use {EXACT!r} or {MONTE_CARLO!r}")
    if gamma == 0.0:
        return false_alarm_rate(dims, mu_th, budget, draws=draws, seed=seed, threads=threads)
    if not dims.is_square:
        raise DomainError(f"exact detection probability needs m = n = p, got {dims}; use {MONTE_CARLO!r}")
    result = evaluate_cdf(dims, mu_th, spike=spike, budget=budget, draws=draws, seed=seed, threads=threads)
    return ProbabilityEstimate(1.0 - result.value, result.err_estimate, result.method)


def _checked_alpha_grid(alpha_grid: Sequence[float]) -> List[float]:
    grid = [float(a) for a in alpha_grid]
    if not grid:
        raise DomainError("false alarm grid is empty")
    for a in grid:
        _check_rate(a)
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise DomainError(f"false alarm grid must be strictly ascending, got {grid}")
    return grid


def roc_profile(dims: ProblemDims, gamma: float, alpha_grid: Sequence[float], method: str = EXACT,
                draws: int = DEFAULT_DRAWS, seed: Seed = DEFAULT_SEED, threads: Optional[int] = None,
                budget: AccuracyBudget = DEFAULT_BUDGET) -> List[DetectorOperatingPoint]:
    """
    ROC points at the requested false alarm rates.

    Thresholds come from the exact null c.d.f. and each point reports the
    false alarm rate re-evaluated at its solved threshold. With
    ``method="monte_carlo"`` one batch of H1 draws serves every threshold.

    Returns:
        List[DetectorOperatingPoint]: sorted by p_f
    """
    grid = _checked_alpha_grid(alpha_grid)
    thresholds = [threshold_for_alpha(dims, a, budget) for a in grid]

    if method == MONTE_CARLO and gamma > 0:
        spike = SpikeParams.along_first_axis(dims.m, gamma)
        scn_values = BatchSampler(dims, spike=spike, threads=threads).scn(draws, seed)
        detections = [_empirical_exceedance(scn_values, mu) for mu in thresholds]
    else:
        detections = [
            detection_probability(dims, gamma, mu, method=method, draws=draws, seed=seed,
                                  threads=threads, budget=budget)
            for mu in thresholds
        ]

    false_alarms = [false_alarm_rate(dims, mu, budget, allow_fallback=False) for mu in thresholds]
    points = [
        DetectorOperatingPoint(mu, p_f.value, detection.value, p_f.err_estimate,
                               detection.err_estimate, detection.method)
        for mu, p_f, detection in zip(thresholds, false_alarms, detections)
    ]
    logger.info(f"ROC profile for {dims}, gamma={gamma}: {len(points)} points")
    return sorted(points, key=lambda point: point.p_f)


def roc_curve(dims: ProblemDims, gamma: float, mu_grid: Sequence[float], method: str = EXACT,
              draws: int = DEFAULT_DRAWS, seed: Seed = DEFAULT_SEED, threads: Optional[int] = None,
              budget: AccuracyBudget = DEFAULT_BUDGET) -> List[DetectorOperatingPoint]:
    """
    ROC traced parametrically: (P_F(μ), P_D(γ, μ)) for every μ on the grid.

    Returns:
        List[DetectorOperatingPoint]: sorted by p_f
    """
    points = []
    for mu in mu_grid:
        p_f = false_alarm_rate(dims, mu, budget, draws=draws, seed=seed, threads=threads)
        p_d = detection_probability(dims, gamma, mu, method=method, draws=draws, seed=seed,
                                    threads=threads, budget=budget)
        points.append(DetectorOperatingPoint(float(mu), p_f.value, p_d.value,
                                             p_f.err_estimate, p_d.err_estimate, p_d.method))
    return sorted(points, key=lambda point: point.p_f)
