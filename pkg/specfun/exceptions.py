"""
Error hierarchy shared by every scn-detector package.

Each error also derives from the closest builtin exception, so callers
can keep catching ``ValueError`` or ``ArithmeticError`` if they prefer.
"""

from typing import Any, Dict, Optional


class ScnError(Exception):
    """Base class for all library errors."""


class DomainError(ScnError, ValueError):
    """An argument lies outside the precondition of an operation."""


class FactorizationError(DomainError):
    """Cholesky factorization failed (matrix not positive definite)."""


class InputValidationError(DomainError):
    """A command-line or run-configuration precondition was violated."""


class NonConvergenceError(ScnError, ArithmeticError):
    """
    A series or quadrature did not reach the requested accuracy.

    Args:
        message: Human readable description
        partial_value: Best value available when the budget ran out
        err_estimate: Error estimate attached to ``partial_value``
    """

    def __init__(self, message: str, partial_value: Optional[float] = None,
                 err_estimate: Optional[float] = None):
        super().__init__(message)
        self.partial_value = partial_value
        self.err_estimate = err_estimate


class NotEvaluableError(NonConvergenceError):
    """
    A closed form cannot be evaluated at the requested arguments.

    The ``diagnostics`` dict records the offending quantities (for example
    the Appell argument that put a pole inside the Euler interval).
    """

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})
