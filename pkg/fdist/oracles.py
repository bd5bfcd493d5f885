"""
Independent reference evaluations of the SCN c.d.f.

1. cdf_scn_monte_carlo - empirical c.d.f. of simulated F-matrix draws
2. cdf_scn_bruteforce_quadrature - direct 2-D integration of the joint
   eigenvalue density for m = 2
"""

import logging
import math
from typing import List, Optional, Sequence

import numpy as np

from matrand.batch import BatchSampler, Seed
from matrand.sampling import CovarianceLike
from matrand.types import ProblemDims, SpikeParams
from specfun.budget import DEFAULT_BUDGET, AccuracyBudget
from specfun.exceptions import DomainError
from specfun.quadrature import integrate_interval

from .constants import log_f_normalization
from .densities import joint_density_h1
from .types import CdfEvaluation, Method

logger = logging.getLogger(__name__)


def _checked_grid(t_grid: Sequence[float]) -> np.ndarray:
    grid = np.atleast_1d(np.asarray(t_grid, dtype=float))
    if grid.size == 0:
        raise DomainError("threshold grid is empty")
    if not np.all(np.isfinite(grid)) or np.any(grid <= 1.0):
        raise DomainError(f"thresholds must be finite and > 1, got {grid}")
    return grid


def empirical_cdf(scn_values: np.ndarray, t_grid: Sequence[float]) -> List[CdfEvaluation]:
    """
    Empirical c.d.f. of precomputed SCN draws at every grid point.

    The draws are sorted once and each threshold is located by bisection.
    The error estimate is the binomial standard error √(F(1−F)/N).
    """
    grid = _checked_grid(t_grid)
    ordered = np.sort(np.asarray(scn_values, dtype=float).reshape(-1))
    draws = ordered.size
    if draws == 0:
        raise DomainError("no draws to build an empirical c.d.f. from")
    counts = np.searchsorted(ordered, grid, side="right")
    values = counts / draws
    errors = np.sqrt(values * (1.0 - values) / draws)
    return [CdfEvaluation(float(t), float(v), Method.MONTE_CARLO, float(e))
            for t, v, e in zip(grid, values, errors)]


def cdf_scn_monte_carlo(dims: ProblemDims, t_grid: Sequence[float], draws: int, seed: Seed,
                        spike: Optional[SpikeParams] = None, noise_cov: CovarianceLike = None,
                        threads: Optional[int] = None) -> List[CdfEvaluation]:
    """
    Monte Carlo estimate of F(t) on a grid from a single pass over the draws.

    Args:
        dims: Problem dimensions
        t_grid: Thresholds (> 1)
        draws: Number of F-matrix draws
        seed: Root seed of the block-parallel sampler
        spike: None for H0, the spike for H1
        noise_cov: Noise covariance Σ (identity when None)
        threads: Worker threads

    Returns:
        List[CdfEvaluation]: one estimate per grid point
    """
    _checked_grid(t_grid)
    sampler = BatchSampler(dims, spike=spike, noise_cov=noise_cov, threads=threads)
    logger.info(f"Monte Carlo c.d.f. for {dims}: {draws} draws, seed {seed}")
    return empirical_cdf(sampler.scn(draws, seed), t_grid)


def _log_density_h0_pair(dims: ProblemDims, log_norm: float, lam1: float, lam2: float) -> float:
    return (log_norm + dims.beta * (math.log(lam1) + math.log(lam2))
            - (dims.p + dims.n) * (math.log1p(lam1) + math.log1p(lam2))
            + 2.0 * math.log(lam2 - lam1))


def cdf_scn_bruteforce_quadrature(dims: ProblemDims, t: float, spike: Optional[SpikeParams] = None,
                                  budget: AccuracyBudget = DEFAULT_BUDGET) -> CdfEvaluation:
    """
    F(t) for m = 2 by integrating the joint density over λ₁ < λ₂ <= t·λ₁.

    The outer variable u ∈ (0, 1) maps to λ₁ = u/(1−u) and the inner
    variable s ∈ (0, 1) to λ₂ = λ₁·t^s, so large thresholds stay resolved.

    Args:
        dims: Problem dimensions with m = 2
        t: Threshold (> 1)
        spike: None for H0, the spike for H1
        budget: Accuracy budget of both nested quadratures

    Returns:
        CdfEvaluation: value with method BruteForceQuadrature
    """
    if dims.m != 2:
        raise DomainError(f"brute-force quadrature is implemented for m = 2, got {dims}")
    if not math.isfinite(t) or not t > 1.0:
        raise DomainError(f"t must be a finite value > 1, got {t}")

    log_t = math.log(t)
    log_norm = log_f_normalization(dims)
    spiked = spike is not None and not spike.is_null

    def density(lam1: float, lam2: float) -> float:
        if lam2 <= lam1:
            return 0.0
        if spiked:
            return joint_density_h1(dims, spike.gamma, [lam1, lam2])
        return math.exp(_log_density_h0_pair(dims, log_norm, lam1, lam2))

    def outer(u: float) -> float:
        lam1 = u / (1.0 - u)

        def inner(s: float) -> float:
            lam2 = lam1 * math.exp(s * log_t)
            return density(lam1, lam2) * lam2 * log_t

        return integrate_interval(inner, 0.0, 1.0, budget).value / (1.0 - u) ** 2

    result = integrate_interval(outer, 0.0, 1.0, budget, points=[0.5, 1.0 / (1.0 + t)])
    return CdfEvaluation(t, result.value, Method.BRUTE_FORCE_QUADRATURE, result.err_estimate)
