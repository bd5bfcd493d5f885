"""
Command implementations.

Each ``cmd_*`` takes a validated RunConfig, writes its table and returns
the process exit code. ``run_command`` maps library errors onto exit codes.
"""

import logging
import math
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from detector import (
    EXACT,
    MONTE_CARLO,
    Statistic,
    cfar_experiment,
    false_alarm_rate,
    robustness_sweep,
    roc_curve,
    roc_profile,
    threshold_for_alpha,
)
from fdist import Method, cdf_scn_monte_carlo, evaluate_cdf, evaluate_cdf_grid, select_method
from specfun.exceptions import DomainError, NonConvergenceError, ScnError

from .config import RunConfig
from .output import (
    CDF_COLUMNS,
    ROC_COLUMNS,
    SIMULATE_CDF_COLUMNS,
    SIMULATE_CFAR_COLUMNS,
    SIMULATE_ROBUSTNESS_COLUMNS,
    THRESHOLD_COLUMNS,
    Table,
    write_table,
)
from .plots import PlotScriptWriter
from .validation import ValidationSuite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_NON_CONVERGENCE = 3


def _emit(config: RunConfig, table: Table, plot_kind: Optional[str] = None) -> int:
    write_table(table, config.fmt, config.output)
    if config.plot_script and plot_kind:
        PlotScriptWriter().write(plot_kind, table, config.output, config.plot_script, config.fmt)
    return EXIT_OK


def _common(config: RunConfig) -> dict:
    return {"m": config.m, "n": config.n, "p": config.p, "seed": config.seed, "draws": config.draws}


def reference_covariances(m: int) -> List[Tuple[str, np.ndarray]]:
    """Identity, a spread diagonal, and real and complex AR(1) Toeplitz covariances."""
    index = np.arange(m)
    lag = index[None, :] - index[:, None]
    real_rho = 0.9
    complex_rho = 0.7 * np.exp(0.25j * np.pi)
    complex_ar = np.where(lag >= 0, complex_rho ** np.abs(lag), np.conj(complex_rho) ** np.abs(lag))
    return [
        ("identity", np.eye(m)),
        ("diagonal", np.diag(np.logspace(0.0, 1.0, m))),
        ("ar1", real_rho ** np.abs(lag).astype(float)),
        ("complex_ar1", complex_ar),
    ]


def cmd_cdf(config: RunConfig) -> int:
    """F(t) on the --t grid; the method column records any Monte Carlo fallback."""
    results = evaluate_cdf_grid(config.dims, config.t_grid, spike=config.spike, method=config.method,
                                draws=config.draws, seed=config.seed, threads=config.threads)
    table = Table("cdf", CDF_COLUMNS)
    for result in results:
        table.add(gamma=config.gamma, t=result.t, value=result.value, err_estimate=result.err_estimate,
                  method=result.method, **_common(config))
    logger.info(f"cdf: {len(results)} thresholds for {config.dims}")
    return _emit(config, table, "cdf")


def cmd_threshold(config: RunConfig) -> int:
    """Threshold and achieved false alarm rate for every --alpha value."""
    fallback = dict(allow_fallback=config.method in (None, Method.MONTE_CARLO),
                    draws=config.draws, seed=config.seed, threads=config.threads)
    table = Table("threshold", THRESHOLD_COLUMNS)
    for alpha_rate in config.alpha_grid:
        mu_th = threshold_for_alpha(config.dims, alpha_rate, **fallback)
        achieved = false_alarm_rate(config.dims, mu_th, **fallback)
        logger.info(f"P_F={alpha_rate}: mu_th={mu_th:.10g}, achieved {achieved.value:.10g} "
                    f"({achieved.method.value})")
        table.add(alpha=alpha_rate, mu_th=mu_th, p_f=achieved.value, err_estimate=achieved.err_estimate,
                  method=achieved.method, **_common(config))
    return _emit(config, table)


def _detection_method(config: RunConfig) -> str:
    if config.method is Method.MONTE_CARLO or not config.dims.is_square:
        return MONTE_CARLO
    return EXACT


def cmd_roc(config: RunConfig) -> int:
    """ROC points at the --alpha rates, or traced over the --mu thresholds."""
    method = _detection_method(config)
    options = dict(method=method, draws=config.draws, seed=config.seed, threads=config.threads)
    if config.mu_grid:
        points = roc_curve(config.dims, config.gamma, config.mu_grid, **options)
    else:
        points = roc_profile(config.dims, config.gamma, config.alpha_grid, **options)

    alphas = [point.p_f for point in points] if config.mu_grid else config.alpha_grid
    table = Table("roc", ROC_COLUMNS)
    for alpha_rate, point in zip(alphas, points):
        table.add(gamma=config.gamma, alpha=alpha_rate, mu_th=point.mu_th, p_f=point.p_f, p_d=point.p_d,
                  err_estimate=point.p_d_err, method=point.method, **_common(config))
    return _emit(config, table, "roc")


def _simulate_cdf(config: RunConfig) -> Table:
    estimates = cdf_scn_monte_carlo(config.dims, config.t_grid, config.draws, config.seed,
                                    spike=config.spike, threads=config.threads)
    has_exact = select_method(config.dims, config.spike) is not Method.MONTE_CARLO
    table = Table("simulate", SIMULATE_CDF_COLUMNS)
    for estimate in estimates:
        exact_value, exact_err, exact_method = math.nan, math.nan, ""
        if has_exact:
            try:
                exact = evaluate_cdf(config.dims, estimate.t, spike=config.spike, allow_fallback=False)
                exact_value, exact_err, exact_method = exact.value, exact.err_estimate, exact.method
            except NonConvergenceError as exc:
                logger.warning(f"No exact reference at t={estimate.t}: {exc}")
        table.add(gamma=config.gamma, t=estimate.t, value=estimate.value, err_estimate=estimate.err_estimate,
                  exact=exact_value, exact_err=exact_err, exact_method=exact_method,
                  method=estimate.method, **_common(config))
    return table


def _simulate_cfar(config: RunConfig) -> Table:
    thresholds = list(config.mu_grid) or [threshold_for_alpha(config.dims, a) for a in config.alpha_grid]
    covariances = reference_covariances(config.m)
    table = Table("simulate", SIMULATE_CFAR_COLUMNS)
    for mu_th in thresholds:
        report = cfar_experiment(config.dims, mu_th, covariances, draws=config.draws, seed=config.seed,
                                 threads=config.threads)
        for row in report.rows:
            table.add(mu_th=mu_th, covariance=row.label, value=row.empirical_p_f, err_estimate=row.stderr,
                      exact=report.exact_p_f, exact_err=report.exact_err, exact_method=report.exact_method,
                      method=Method.MONTE_CARLO, **_common(config))
    return table


def _simulate_robustness(config: RunConfig) -> Table:
    sweep = robustness_sweep(config.dims, config.epsilons, config.alpha_grid[0], draws=config.draws,
                             seed=config.seed, threads=config.threads)
    table = Table("simulate", SIMULATE_ROBUSTNESS_COLUMNS)
    for statistic in Statistic:
        for report in sweep[statistic]:
            table.add(statistic=statistic.value, epsilon=report.scenario.epsilon, threshold=report.threshold,
                      nominal=report.nominal_p_f, value=report.empirical_p_f, err_estimate=report.stderr,
                      method=Method.MONTE_CARLO, **_common(config))
    return table


_EXPERIMENTS: Dict[str, Callable[[RunConfig], Table]] = {
    "cdf": _simulate_cdf,
    "cfar": _simulate_cfar,
    "robustness": _simulate_robustness,
}


def cmd_simulate(config: RunConfig) -> int:
    """Simulation study selected by --experiment, with binomial standard errors."""
    logger.info(f"simulate {config.experiment}: {config.dims}, {config.draws} draws, seed {config.seed}")
    table = _EXPERIMENTS[config.experiment](config)
    return _emit(config, table, config.experiment)


def cmd_validate(config: RunConfig) -> int:
    """Run the acceptance suite and print one PASS/FAIL line per check."""
    suite = ValidationSuite(config)
    results = suite.run()
    for result in results:
        print(result.line())
    failed = [result.name for result in results if not result.passed]
    if failed:
        logger.error(f"{len(failed)} validation checks failed: {', '.join(failed)}")
        return EXIT_VALIDATION_FAILED
    logger.info(f"All {len(results)} validation checks passed")
    return EXIT_OK


COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    "cdf": cmd_cdf,
    "threshold": cmd_threshold,
    "roc": cmd_roc,
    "simulate": cmd_simulate,
    "validate": cmd_validate,
}


def run_command(config: RunConfig) -> int:
    """Dispatch a command and translate library errors into exit codes."""
    try:
        return COMMANDS[config.command](config)
    except DomainError as exc:
        logger.error(f"Input validation failed: {exc}")
        return EXIT_INPUT_ERROR
    except NonConvergenceError as exc:
        logger.error(f"Numerical evaluation did not converge: {exc}")
        return EXIT_NON_CONVERGENCE
    except ScnError as exc:
        logger.error(f"{config.command} failed: {exc}")
        return EXIT_NON_CONVERGENCE
