"""
Method selection for the SCN c.d.f.

``evaluate_cdf`` picks the cheapest exact form that applies to the problem
shape and hypothesis. When the exact form is not evaluable (or does not
converge) it falls back to Monte Carlo and tags the result accordingly.
An explicitly requested method is never replaced.
"""

import logging
from typing import List, Optional, Sequence

from matrand.batch import Seed
from matrand.types import ProblemDims, SpikeParams
from specfun.budget import DEFAULT_BUDGET, AccuracyBudget
from specfun.exceptions import DomainError, NonConvergenceError

from .null_cdf import (
    cdf_h0_corollary1,
    cdf_h0_corollary2,
    cdf_h0_reciprocal,
    cdf_h0_theorem1,
    corollary1_applies,
)
from .oracles import cdf_scn_bruteforce_quadrature, cdf_scn_monte_carlo
from .spiked_cdf import cdf_h1_theorem2, theorem2_evaluable
from .types import CdfEvaluation, Method

logger = logging.getLogger(__name__)

DEFAULT_DRAWS = 100_000
DEFAULT_SEED = 20240611


def _is_null(spike: Optional[SpikeParams]) -> bool:
    return spike is None or spike.is_null


def select_method(dims: ProblemDims, spike: Optional[SpikeParams] = None) -> Method:
    """
    Exact method used for a problem shape and hypothesis.

    Under H0: n = p = m uses the single-term form, n = m (or p = m, through
    the reciprocal symmetry) the Beta-2F1 sum when its constraint holds,
    and the y-integral form otherwise. Under H1 the closed form covers
    m = n = p with m <= 2; other shapes go to Monte Carlo.
    """
    if _is_null(spike):
        if dims.is_square:
            return Method.COROLLARY2
        if corollary1_applies(dims) or (dims.beta == 0 and corollary1_applies(dims.swapped())):
            return Method.COROLLARY1
        return Method.THEOREM1
    if dims.is_square and theorem2_evaluable(dims.m):
        return Method.THEOREM2
    return Method.MONTE_CARLO


def _exact(dims: ProblemDims, t: float, spike: Optional[SpikeParams], method: Method,
           budget: AccuracyBudget) -> CdfEvaluation:
    null = _is_null(spike)
    if not null and method not in (Method.THEOREM2, Method.BRUTE_FORCE_QUADRATURE):
        raise DomainError(f"{method.value} applies to H0 only")
    if method is Method.BRUTE_FORCE_QUADRATURE:
        return cdf_scn_bruteforce_quadrature(dims, t, spike=spike, budget=budget)
    if method is Method.THEOREM2:
        if null:
            raise DomainError("Theorem2 needs a spike with gamma > 0")
        if not dims.is_square:
            raise DomainError(f"spiked closed form needs m = n = p, got {dims}")
        return cdf_h1_theorem2(dims.m, spike.gamma, t, budget)
    if method is Method.COROLLARY2:
        if not dims.is_square:
            raise DomainError(f"single-term form needs n = p = m, got {dims}")
        return cdf_h0_corollary2(dims.m, t, budget)
    if method is Method.COROLLARY1:
        if dims.alpha == 0:
            return cdf_h0_corollary1(dims, t, budget)
        return cdf_h0_reciprocal(dims, t, budget)
    return cdf_h0_theorem1(dims, t, budget)


def evaluate_cdf_grid(dims: ProblemDims, t_grid: Sequence[float], spike: Optional[SpikeParams] = None,
                      budget: AccuracyBudget = DEFAULT_BUDGET, method: Optional[Method] = None,
                      draws: int = DEFAULT_DRAWS, seed: Seed = DEFAULT_SEED,
                      threads: Optional[int] = None, allow_fallback: bool = True) -> List[CdfEvaluation]:
    """
    Evaluate F(t) on a grid of thresholds.

    Grid points the exact method cannot handle share one Monte Carlo batch.

    Args:
        dims: Problem dimensions
        t_grid: Thresholds (> 1)
        spike: None (or γ = 0) for H0, the spike for H1
        budget: Accuracy budget of the exact methods
        method: Force a method; automatic selection when None
        draws: Monte Carlo draws for the fallback (or for ``Method.MONTE_CARLO``)
        seed: Monte Carlo root seed
        threads: Monte Carlo worker threads
        allow_fallback: Fall back to Monte Carlo when an automatically
            selected exact method fails

    Returns:
        List[CdfEvaluation]: one result per grid point, in grid order
    """
    grid = [float(t) for t in t_grid]
    forced = method is not None
    chosen = method if forced else select_method(dims, spike)

    if chosen is Method.MONTE_CARLO:
        return cdf_scn_monte_carlo(dims, grid, draws, seed, spike=spike, threads=threads)

    results: List[Optional[CdfEvaluation]] = []
    pending = []
    for index, t in enumerate(grid):
        try:
            results.append(_exact(dims, t, spike, chosen, budget))
        except NonConvergenceError as exc:
            if forced or not allow_fallback:
                raise
            logger.warning(f"{chosen.value} failed at t={t} for {dims} ({exc}); using Monte Carlo")
            results.append(None)
            pending.append(index)

    if pending:
        estimates = cdf_scn_monte_carlo(dims, [grid[i] for i in pending], draws, seed,
                                        spike=spike, threads=threads)
        for index, estimate in zip(pending, estimates):
            results[index] = estimate
    return results


def evaluate_cdf(dims: ProblemDims, t: float, spike: Optional[SpikeParams] = None,
                 budget: AccuracyBudget = DEFAULT_BUDGET, method: Optional[Method] = None,
                 draws: int = DEFAULT_DRAWS, seed: Seed = DEFAULT_SEED,
                 threads: Optional[int] = None, allow_fallback: bool = True) -> CdfEvaluation:
    """F(t) at a single threshold; see ``evaluate_cdf_grid``."""
    return evaluate_cdf_grid(dims, [t], spike=spike, budget=budget, method=method, draws=draws,
                             seed=seed, threads=threads, allow_fallback=allow_fallback)[0]
