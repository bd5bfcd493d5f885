"""
Accuracy budgets for series summation and adaptive quadrature.
"""

from dataclasses import dataclass, replace

from .exceptions import DomainError


@dataclass(frozen=True)
class AccuracyBudget:
    """
    Tolerances and caps handed to every numerical kernel.

    Args:
        rel_tol: Relative tolerance
        abs_tol: Absolute tolerance
        max_terms: Maximum number of series terms
        max_quad_refinements: Maximum number of quadrature subintervals
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_terms: int = 100_000
    max_quad_refinements: int = 30

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be positive, got {self.rel_tol}")
        if not self.abs_tol > 0:
            raise DomainError(f"abs_tol must be positive, got {self.abs_tol}")
        if int(self.max_terms) != self.max_terms or self.max_terms < 1:
            raise DomainError(f"max_terms must be an integer >= 1, got {self.max_terms}")
        if int(self.max_quad_refinements) != self.max_quad_refinements or self.max_quad_refinements < 1:
            raise DomainError(
                f"max_quad_refinements must be an integer >= 1, got {self.max_quad_refinements}"
            )

    def tolerance(self, magnitude: float) -> float:
        """Absolute tolerance for a quantity of the given magnitude."""
        return self.abs_tol + self.rel_tol * abs(magnitude)

    def scaled(self, factor: float) -> "AccuracyBudget":
        """Return a copy with both tolerances multiplied by ``factor``."""
        return replace(self, rel_tol=self.rel_tol * factor, abs_tol=self.abs_tol * factor)


DEFAULT_BUDGET = AccuracyBudget()
