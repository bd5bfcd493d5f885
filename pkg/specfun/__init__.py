"""
Special Function Kernel

Scalar special functions and quadrature primitives used by the closed-form
c.d.f. expressions:

1. AccuracyBudget - tolerances and caps shared by every kernel
2. ln_gamma, complex_mv_ln_gamma, pochhammer_ln, ln_beta - gamma family in log space
3. gauss_2f1, appell_f1 - hypergeometric functions for real arguments
4. integrate_interval, integrate_semi_infinite - adaptive quadrature
5. The error hierarchy used across the project
"""

from .budget import AccuracyBudget, DEFAULT_BUDGET
from .exceptions import (
    ScnError,
    DomainError,
    FactorizationError,
    InputValidationError,
    NonConvergenceError,
    NotEvaluableError,
)
from .gamma import (
    PochhammerLog,
    ln_gamma,
    log_factorial,
    complex_mv_ln_gamma,
    pochhammer_ln,
    ln_beta,
)
from .hypergeometric import gauss_2f1, appell_f1
from .quadrature import QuadratureResult, integrate_interval, integrate_semi_infinite
from .summation import SignedSum, signed_exp_sum, compensated_sum

__all__ = [
    'AccuracyBudget',
    'DEFAULT_BUDGET',
    'ScnError',
    'DomainError',
    'FactorizationError',
    'InputValidationError',
    'NonConvergenceError',
    'NotEvaluableError',
    'PochhammerLog',
    'ln_gamma',
    'log_factorial',
    'complex_mv_ln_gamma',
    'pochhammer_ln',
    'ln_beta',
    'gauss_2f1',
    'appell_f1',
    'QuadratureResult',
    'integrate_interval',
    'integrate_semi_infinite',
    'SignedSum',
    'signed_exp_sum',
    'compensated_sum',
]
