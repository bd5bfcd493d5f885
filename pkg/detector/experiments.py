"""
Simulation studies of the SCN detector.

1. cfar_experiment - empirical false alarm rate at a fixed threshold for
   several noise covariances, against the exact value
2. robustness_experiment / robustness_sweep - false alarm rate of the SCN
   and λ_max statistics when the signal sample covariance is mis-scaled by
   (1 + ε); both statistics see the same whitened draws
"""

import logging
import math
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from fdist.dispatch import DEFAULT_DRAWS, DEFAULT_SEED
from matrand.batch import BatchSampler
from matrand.sampling import CovarianceLike, apply_perturbation, scn_of
from matrand.types import HermitianMatrix, ProblemDims
from specfun.budget import DEFAULT_BUDGET, AccuracyBudget
from specfun.exceptions import DomainError

from .performance import empirical_threshold, false_alarm_rate
from .types import CfarReport, CfarRow, RobustnessReport, RobustnessScenario, Statistic

logger = logging.getLogger(__name__)

CovarianceEntry = Union[CovarianceLike, Tuple[str, CovarianceLike]]


def _labelled(covariances: Sequence[CovarianceEntry]) -> List[Tuple[str, CovarianceLike]]:
    labelled = []
    for index, entry in enumerate(covariances):
        if isinstance(entry, tuple):
            label, matrix = entry
        else:
            label, matrix = f"cov{index}", entry
        if matrix is not None:
            HermitianMatrix.of(matrix).cholesky_factor()
        labelled.append((label, matrix))
    return labelled


def cfar_experiment(dims: ProblemDims, mu_th: float, covariances: Sequence[CovarianceEntry],
                    draws: int = DEFAULT_DRAWS, seed: int = DEFAULT_SEED,
                    threads: Optional[int] = None,
                    budget: AccuracyBudget = DEFAULT_BUDGET) -> CfarReport:
    """
    Empirical P_F at ``mu_th`` for every noise covariance.

    Covariance i draws from the stream (seed, i), so the rows are
    independent of each other and reproducible one by one.

    Args:
        dims: Problem dimensions
        mu_th: SCN threshold (> 1)
        covariances: Positive definite noise covariances, optionally as (label, matrix)
        draws: Draws per covariance
        seed: Root seed
        threads: Worker threads
        budget: Accuracy budget of the exact P_F

    Returns:
        CfarReport: per-covariance rates and the exact reference
    """
    labelled = _labelled(covariances)
    if not labelled:
        raise DomainError("at least one covariance is required")
    exact = false_alarm_rate(dims, mu_th, budget, draws=draws, seed=seed, threads=threads)

    rows = []
    for index, (label, covariance) in enumerate(labelled):
        scn_values = BatchSampler(dims, noise_cov=covariance, threads=threads).scn(draws, [seed, index])
        rate = float(np.count_nonzero(scn_values > mu_th)) / draws
        rows.append(CfarRow(label, rate, math.sqrt(rate * (1.0 - rate) / draws)))
        logger.debug(f"CFAR {label}: empirical P_F {rate:.6f}")

    report = CfarReport(mu_th, exact.value, exact.err_estimate, exact.method, draws, rows)
    logger.info(f"CFAR experiment {dims} at mu={mu_th:.6g}: exact P_F {exact.value:.6f}, "
                f"max pairwise deviation {report.max_pairwise_deviation:.2e}")
    return report


def statistic_values(eigenvalues: np.ndarray, statistic: Statistic) -> np.ndarray:
    """Per-draw statistic from an (N, m) array of ascending eigenvalues."""
    if statistic is Statistic.SCN:
        return scn_of(eigenvalues)
    return eigenvalues[..., -1]


def lambda_max_threshold(dims: ProblemDims, alpha_rate: float, draws: int = DEFAULT_DRAWS,
                         seed: int = DEFAULT_SEED, threads: Optional[int] = None) -> float:
    """
    Empirical λ_max threshold for a target false alarm rate, calibrated at ε = 0.

    λ_max has no parameter-free null law, so the (1 − a) quantile of
    simulated null draws is used. The same (draws, seed) pair reproduces
    the draws of ``robustness_experiment``.
    """
    eigenvalues = BatchSampler(dims, threads=threads).eigenvalues(draws, seed)
    return empirical_threshold(statistic_values(eigenvalues, Statistic.LAMBDA_MAX), alpha_rate)


def _report(eigenvalues: np.ndarray, scenario: RobustnessScenario, threshold: float,
            nominal: float) -> RobustnessReport:
    draws = eigenvalues.shape[0]
    perturbed = apply_perturbation(eigenvalues, scenario.epsilon)
    rate = float(np.count_nonzero(statistic_values(perturbed, scenario.statistic) > threshold)) / draws
    stderr = math.sqrt(nominal * (1.0 - nominal) / draws)
    return RobustnessReport(scenario, threshold, nominal, rate, stderr, draws)


def robustness_experiment(dims: ProblemDims, scenario: RobustnessScenario,
                          threshold: Optional[float] = None, alpha_rate: Optional[float] = None,
                          draws: int = DEFAULT_DRAWS, seed: int = DEFAULT_SEED,
                          threads: Optional[int] = None,
                          budget: AccuracyBudget = DEFAULT_BUDGET) -> RobustnessReport:
    """
    Empirical false alarm rate of one statistic under the perturbation Ψ̂_ε = Ψ̂/(1 + ε).

    Exactly one calibration source is used for the threshold:

    * ``threshold`` given: the nominal rate is ``alpha_rate`` when also
      given, else the exact P_F for SCN or the ε = 0 empirical rate for λ_max
    * only ``alpha_rate`` given: the threshold is the (1 − a) quantile of
      the statistic on the unperturbed draws

    Returns:
        RobustnessReport: empirical rate with its binomial standard error
    """
    if threshold is None and alpha_rate is None:
        raise DomainError("either a threshold or a target false alarm rate is required")
    eigenvalues = BatchSampler(dims, threads=threads).eigenvalues(draws, seed)
    baseline = statistic_values(eigenvalues, scenario.statistic)

    if threshold is None:
        threshold = empirical_threshold(baseline, alpha_rate)
        nominal = alpha_rate
    elif alpha_rate is not None:
        nominal = alpha_rate
    elif scenario.statistic is Statistic.SCN:
        nominal = false_alarm_rate(dims, threshold, budget, allow_fallback=False).value
    else:
        nominal = float(np.count_nonzero(baseline > threshold)) / draws

    report = _report(eigenvalues, scenario, threshold, nominal)
    logger.info(f"Robustness {scenario.statistic.value} eps={scenario.epsilon}: "
                f"P_F {report.empirical_p_f:.5f} vs nominal {nominal:.5f}")
    return report


def robustness_sweep(dims: ProblemDims, epsilons: Sequence[float], alpha_rate: float,
                     draws: int = DEFAULT_DRAWS, seed: int = DEFAULT_SEED,
                     threads: Optional[int] = None) -> Dict[Statistic, List[RobustnessReport]]:
    """
    Both statistics over a grid of ε on one shared batch of null draws.

    Each statistic is calibrated to ``alpha_rate`` on the unperturbed draws.
    """
    eigenvalues = BatchSampler(dims, threads=threads).eigenvalues(draws, seed)
    results = {}
    for statistic in Statistic:
        threshold = empirical_threshold(statistic_values(eigenvalues, statistic), alpha_rate)
        results[statistic] = [
            _report(eigenvalues, RobustnessScenario(float(eps), statistic), threshold, alpha_rate)
            for eps in epsilons
        ]
    return results
