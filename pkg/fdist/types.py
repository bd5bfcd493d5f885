from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from matrand.types import ProblemDims
from specfun.exceptions import DomainError


class Method(Enum):
    """Evaluation path that produced a c.d.f. value."""

    THEOREM1 = "Theorem1"
    COROLLARY1 = "Corollary1"
    COROLLARY2 = "Corollary2"
    THEOREM2 = "Theorem2"
    MONTE_CARLO = "MonteCarlo"
    BRUTE_FORCE_QUADRATURE = "BruteForceQuadrature"

    @property
    def is_exact(self) -> bool:
        return self is not Method.MONTE_CARLO

    @classmethod
    def parse(cls, label: str) -> "Method":
        for method in cls:
            if method.value.lower() == label.lower() or method.name.lower() == label.lower():
                return method
        raise DomainError(f"unknown method {label!r}; choose from {[m.value for m in cls]}")


@dataclass(frozen=True)
class CdfEvaluation:
    """
    One evaluation of F(t) = Pr{κ² <= t}.

    ``value`` is stored unclamped; it lies in [0, 1 + err_estimate].
    """

    t: float
    value: float
    method: Method
    err_estimate: float

    @property
    def clamped(self) -> float:
        return min(1.0, max(0.0, self.value))


@dataclass(frozen=True)
class IndexTuple:
    """
    Summation indices of the null c.d.f., one per determinant row.

    The rows come in two groups: the β rows of the signal-side point come first, then the
    α rows of the noise-side point. Within a group the r-th row (r = 0, 1, ...)
    ranges over 0..m+α+β-r-2.
    """

    dims: ProblemDims
    j: Tuple[int, ...]

    def __post_init__(self):
        bounds = row_bounds(self.dims)
        if len(self.j) != len(bounds):
            raise DomainError(f"expected {len(bounds)} indices, got {len(self.j)}")
        for value, bound in zip(self.j, bounds):
            if not 0 <= value <= bound:
                raise DomainError(f"index {value} outside 0..{bound}")

    @property
    def signal_sum(self) -> int:
        return sum(self.j[:self.dims.beta])

    @property
    def noise_sum(self) -> int:
        return sum(self.j[self.dims.beta:])


def row_orders(dims: ProblemDims) -> Tuple[int, ...]:
    """Derivative order of each determinant row (β rows, then α rows)."""
    return tuple(range(dims.beta)) + tuple(range(dims.alpha))


def row_bounds(dims: ProblemDims) -> Tuple[int, ...]:
    """Largest admissible index per row, m + α + β - r - 2."""
    top = dims.m + dims.alpha + dims.beta - 2
    return tuple(top - r for r in row_orders(dims))
