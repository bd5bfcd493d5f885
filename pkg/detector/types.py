from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from fdist.types import Method
from specfun.exceptions import DomainError


class Statistic(Enum):
    """Test statistic computed from the whitened sample matrix."""

    SCN = "SCN"
    LAMBDA_MAX = "LambdaMax"

    @classmethod
    def parse(cls, label: str) -> "Statistic":
        for statistic in cls:
            if statistic.value.lower() == label.lower() or statistic.name.lower() == label.lower():
                return statistic
        raise DomainError(f"unknown statistic {label!r}; choose from {[s.value for s in cls]}")


@dataclass(frozen=True)
class ProbabilityEstimate:
    """A false-alarm or detection probability with its error estimate and provenance."""

    value: float
    err_estimate: float
    method: Method


@dataclass(frozen=True)
class DetectorOperatingPoint:
    """
    One point of a ROC profile.

    ``p_d`` is None when no spike strength was given.
    """

    mu_th: float
    p_f: float
    p_d: Optional[float] = None
    p_f_err: float = 0.0
    p_d_err: float = 0.0
    method: Optional[Method] = None

    def __post_init__(self):
        if not self.mu_th > 1.0:
            raise DomainError(f"threshold must be > 1, got {self.mu_th}")


@dataclass(frozen=True)
class RobustnessScenario:
    """Covariance-estimation error ε applied to the signal sample matrix, and the statistic under test."""

    epsilon: float
    statistic: Statistic = Statistic.SCN

    def __post_init__(self):
        if not self.epsilon >= 0:
            raise DomainError(f"epsilon must be >= 0, got {self.epsilon}")


@dataclass(frozen=True)
class CfarRow:
    label: str
    empirical_p_f: float
    stderr: float


@dataclass(frozen=True)
class CfarReport:
    """Empirical false-alarm rates at one threshold across several noise covariances."""

    mu_th: float
    exact_p_f: float
    exact_err: float
    exact_method: Method
    draws: int
    rows: List[CfarRow] = field(default_factory=list)

    @property
    def max_pairwise_deviation(self) -> float:
        rates = [row.empirical_p_f for row in self.rows]
        return max(rates) - min(rates) if rates else 0.0

    @property
    def max_exact_deviation(self) -> float:
        return max((abs(row.empirical_p_f - self.exact_p_f) for row in self.rows), default=0.0)


@dataclass(frozen=True)
class RobustnessReport:
    """Empirical false-alarm rate of one statistic under covariance-estimation error."""

    scenario: RobustnessScenario
    threshold: float
    nominal_p_f: float
    empirical_p_f: float
    stderr: float
    draws: int

    @property
    def deviation_in_stderr(self) -> float:
        if self.stderr == 0.0:
            return 0.0 if self.empirical_p_f == self.nominal_p_f else float("inf")
        return abs(self.empirical_p_f - self.nominal_p_f) / self.stderr
