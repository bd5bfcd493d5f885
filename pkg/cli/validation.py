"""
Acceptance suite run by ``main.py validate``.

Every check is a method returning (passed, detail). The tolerances of all
checks are multiplied by ``--inject-tolerance``, so a tiny factor must make
the suite fail and proves the comparisons are live.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Tuple

import numpy as np

from detector import threshold_for_alpha, cfar_experiment
from fdist import (
    Method,
    cdf_h0_corollary1,
    cdf_h0_corollary2,
    cdf_h0_theorem1,
    cdf_h1_theorem2,
    cdf_scn_bruteforce_quadrature,
    cdf_scn_monte_carlo,
    evaluate_cdf_grid,
    select_method,
)
from matrand import BatchSampler, ProblemDims, SpikeParams, scn_of
from specfun import AccuracyBudget, ScnError, appell_f1, gauss_2f1, ln_beta, ln_gamma

from .config import RunConfig

QUICK_DRAWS = 10_000
ORACLE_BUDGET = AccuracyBudget(rel_tol=1e-10, abs_tol=1e-14, max_quad_refinements=200)
NULL_SHAPES = [ProblemDims(2, 2, 2), ProblemDims(2, 3, 3), ProblemDims(3, 3, 3),
               ProblemDims(3, 3, 4), ProblemDims(2, 4, 3), ProblemDims(4, 4, 4)]
SPIKED_SENSORS = [2, 3]
SPIKE_STRENGTHS = [0.5, 2.0, 5.0]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


class ValidationSuite:
    """
    Oracle agreement, degeneration chain, monotonicity and identity checks.

    Args:
        config: Validated run configuration (``--quick``, ``--sigma``,
            ``--inject-tolerance``, ``--draws``, ``--seed``, ``--threads``)
    """

    def __init__(self, config: RunConfig):
        self.logger = logging.getLogger(self.__class__.__name__)
        self.scale = config.inject_tolerance
        self.sigma = config.sigma * config.inject_tolerance
        self.draws = QUICK_DRAWS if config.quick else config.draws
        self.seed = config.seed
        self.threads = config.threads

    def tol(self, value: float) -> float:
        return value * self.scale

    def checks(self) -> List[Tuple[str, Callable[[], Tuple[bool, str]]]]:
        return [
            ("special_functions", self.check_special_functions),
            ("beta_gamma", self.check_beta_gamma),
            ("degeneration_chain", self.check_degeneration_chain),
            ("quadrature_oracle", self.check_quadrature_oracle),
            ("null_monte_carlo", self.check_null_monte_carlo),
            ("spiked_monte_carlo", self.check_spiked_monte_carlo),
            ("monotonicity_limits", self.check_monotonicity_limits),
            ("normalisation", self.check_normalisation),
            ("cfar_invariance", self.check_cfar_invariance),
            ("epsilon_identities", self.check_epsilon_identities),
        ]

    def run(self) -> List[CheckResult]:
        results = []
        for name, check in self.checks():
            self.logger.info(f"Running check {name}")
            try:
                passed, detail = check()
            except ScnError as exc:
                passed, detail = False, f"raised {exc.__class__.__name__}: {exc}"
            results.append(CheckResult(name, bool(passed), detail))
        return results

    def check_special_functions(self):
        z = 0.5
        log_identity = abs(z * gauss_2f1(1.0, 1.0, 2.0, z) + math.log1p(-z))
        series = appell_f1(2.0, 0.5, 1.5, 4.0, 0.3, 0.6, method="series")
        integral = appell_f1(2.0, 0.5, 1.5, 4.0, 0.3, 0.6, method="integral")
        reduction = abs(appell_f1(2.0, 0.5, 1.5, 4.0, 0.4, 0.4, method="integral")
                        - gauss_2f1(2.0, 2.0, 4.0, 0.4))
        worst = max(log_identity, abs(series - integral) / abs(series), reduction)
        return worst <= self.tol(1e-9), f"max deviation {worst:.2e}"

    def check_beta_gamma(self):
        recurrence = abs(ln_gamma(7.5) - math.log(6.5) - ln_gamma(6.5))
        beta = abs(ln_beta(2.5, 3.5) - (ln_gamma(2.5) + ln_gamma(3.5) - ln_gamma(6.0)))
        factorial = abs(ln_gamma(11.0) - math.log(math.factorial(10)))
        worst = max(recurrence, beta, factorial)
        return worst <= self.tol(1e-12), f"max deviation {worst:.2e}"

    def check_degeneration_chain(self):
        deviations = []
        for m, p, t in [(2, 3, 3.0), (3, 4, 1.5), (3, 5, 10.0)]:
            dims = ProblemDims(m, m, p)
            deviations.append(abs(cdf_h0_theorem1(dims, t).value - cdf_h0_corollary1(dims, t).value))
        deviations.append(abs(cdf_h0_corollary1(ProblemDims(3, 3, 3), 2.0).value
                              - cdf_h0_corollary2(3, 2.0).value))
        worst = max(deviations)
        return worst <= self.tol(1e-8), f"max deviation {worst:.2e}"

    def check_quadrature_oracle(self):
        cases = [
            (ProblemDims(2, 2, 2), lambda d, t: cdf_h0_corollary2(2, t)),
            (ProblemDims(2, 2, 3), cdf_h0_corollary1),
            (ProblemDims(2, 3, 3), cdf_h0_theorem1),
        ]
        worst = 0.0
        for dims, exact in cases:
            for t in [1.5, 3.0, 10.0]:
                reference = cdf_scn_bruteforce_quadrature(dims, t, budget=ORACLE_BUDGET).value
                worst = max(worst, abs(exact(dims, t).value - reference))
        return worst <= self.tol(1e-6), f"max deviation {worst:.2e}"

    def _band(self, exact: float, estimate: float, err: float) -> Tuple[bool, float]:
        stderr = math.sqrt(max(exact * (1.0 - exact), 1.0 / self.draws) / self.draws)
        z = abs(exact - estimate) / stderr
        return abs(exact - estimate) <= self.sigma * stderr + self.tol(err), z

    def check_null_monte_carlo(self):
        grid = [1.5, 3.0, 10.0, 50.0]
        worst_z = 0.0
        passed = True
        for index, dims in enumerate(NULL_SHAPES):
            estimates = cdf_scn_monte_carlo(dims, grid, self.draws, [self.seed, index], threads=self.threads)
            exact = evaluate_cdf_grid(dims, grid, allow_fallback=False)
            for reference, estimate in zip(exact, estimates):
                ok, z = self._band(reference.value, estimate.value, reference.err_estimate)
                passed &= ok
                worst_z = max(worst_z, z)
        return passed, (f"largest deviation {worst_z:.2f} standard errors over {len(NULL_SHAPES)} shapes "
                        f"at {self.draws} draws")

    def check_spiked_monte_carlo(self):
        grid = [1.2, 1.8]
        worst_z = 0.0
        passed = True
        for index, (m, gamma) in enumerate(itertools.product(SPIKED_SENSORS, SPIKE_STRENGTHS)):
            dims = ProblemDims(m, m, m)
            spike = SpikeParams.along_first_axis(m, gamma)
            estimates = cdf_scn_monte_carlo(dims, grid, self.draws, [self.seed, 100 + index],
                                            spike=spike, threads=self.threads)
            for t, estimate in zip(grid, estimates):
                null = cdf_h0_corollary2(m, t).value
                stderr = math.sqrt(max(null * (1.0 - null), 1.0 / self.draws) / self.draws)
                passed &= 0.0 <= estimate.value <= null + self.sigma * stderr
                if select_method(dims, spike) is Method.THEOREM2:
                    exact = cdf_h1_theorem2(m, gamma, t)
                    passed &= -self.tol(exact.err_estimate) <= exact.value <= null + self.tol(1e-12)
                    ok, z = self._band(exact.value, estimate.value, exact.err_estimate)
                    passed &= ok
                    worst_z = max(worst_z, z)
        return passed, (f"largest deviation {worst_z:.2f} standard errors, H1 <= H0 on "
                        f"{len(SPIKED_SENSORS) * len(SPIKE_STRENGTHS)} spikes at {self.draws} draws")

    def check_monotonicity_limits(self):
        dims = ProblemDims(3, 4, 5)
        grid = [1.1, 1.5, 2.0, 4.0, 10.0, 100.0]
        values = [cdf_h0_theorem1(dims, t).value for t in grid]
        steps = np.diff(values)
        monotone = bool(np.all(steps >= -self.tol(1e-10)))
        low = cdf_h0_theorem1(dims, 1.001).value
        high = cdf_h0_corollary2(2, 1e8).value
        limits = abs(low) <= self.tol(1e-8) and abs(1.0 - high) <= self.tol(1e-5)
        return monotone and limits, f"min step {steps.min():.2e}, F(1+) = {low:.2e}, 1 - F(1e8) = {1.0 - high:.2e}"

    def check_normalisation(self):
        null_total = cdf_scn_bruteforce_quadrature(ProblemDims(2, 3, 3), 1e12, budget=ORACLE_BUDGET).value
        spiked_total = cdf_scn_bruteforce_quadrature(
            ProblemDims(2, 2, 2), 1e12, spike=SpikeParams.along_first_axis(2, 1.0), budget=ORACLE_BUDGET
        ).value
        worst = max(abs(1.0 - null_total), abs(1.0 - spiked_total))
        return worst <= self.tol(1e-7), f"f0 mass {null_total:.12f}, f1 mass {spiked_total:.12f}"

    def check_cfar_invariance(self):
        dims = ProblemDims(2, 3, 3)
        mu_th = threshold_for_alpha(dims, 0.1)
        covariances = [None, np.diag([1.0, 10.0]), np.array([[2.0, 0.9j], [-0.9j, 1.0]])]
        report = cfar_experiment(dims, mu_th, covariances, draws=self.draws, seed=self.seed,
                                 threads=self.threads)
        stderr = math.sqrt(report.exact_p_f * (1.0 - report.exact_p_f) / self.draws)
        passed = report.max_exact_deviation <= self.sigma * stderr + self.tol(report.exact_err)
        return passed, (f"exact P_F {report.exact_p_f:.5f}, max deviation "
                        f"{report.max_exact_deviation / stderr:.2f} standard errors")

    def check_epsilon_identities(self):
        sampler = BatchSampler(ProblemDims(3, 3, 4), threads=self.threads)
        draws = min(self.draws, 20_000)
        base = sampler.eigenvalues(draws, self.seed)
        halved = sampler.eigenvalues(draws, self.seed, perturbation=1.0)
        shifted = sampler.eigenvalues(draws, self.seed, perturbation=0.3)
        scn_exact = bool(np.array_equal(scn_of(halved), scn_of(base)))
        lambda_exact = bool(np.array_equal(shifted[:, -1], base[:, -1] / 1.3))
        scn_close = float(np.max(np.abs(scn_of(shifted) / scn_of(base) - 1.0)))
        passed = scn_exact and lambda_exact and scn_close <= self.tol(1e-13)
        return passed, f"scn bitwise {scn_exact}, lambda_max exact {lambda_exact}, scn drift {scn_close:.1e}"
