"""
F-Matrix SCN Distribution Package

Exact and reference evaluations of F(t) = Pr{κ² <= t} for the squared
condition number of complex F-matrices:

1. joint_density_h0, joint_density_h1 - ordered-eigenvalue densities
2. cdf_h0_theorem1, cdf_h0_corollary1, cdf_h0_corollary2 - null closed forms
3. cdf_h1_theorem2 - spiked closed form for m = n = p
4. cdf_scn_monte_carlo, cdf_scn_bruteforce_quadrature - oracles
5. evaluate_cdf, evaluate_cdf_grid - method selection with Monte Carlo fallback
"""

from .types import Method, CdfEvaluation, IndexTuple, row_bounds, row_orders
from .constants import (
    log_f_normalization,
    log_spiked_normalization,
    log_selberg_constant,
    jacobi_coefficients,
    NullCdfLedger,
    null_cdf_ledger,
)
from .densities import joint_density_h0, joint_density_h1, log_joint_density_h0
from .null_cdf import (
    cdf_h0_theorem1,
    cdf_h0_corollary1,
    cdf_h0_corollary2,
    cdf_h0_reciprocal,
    corollary1_applies,
    theorem1_converges,
)
from .spiked_cdf import cdf_h1_theorem2, theorem2_evaluable
from .oracles import empirical_cdf, cdf_scn_monte_carlo, cdf_scn_bruteforce_quadrature
from .dispatch import DEFAULT_DRAWS, DEFAULT_SEED, select_method, evaluate_cdf, evaluate_cdf_grid

__all__ = [
    'Method',
    'CdfEvaluation',
    'IndexTuple',
    'row_bounds',
    'row_orders',
    'log_f_normalization',
    'log_spiked_normalization',
    'log_selberg_constant',
    'jacobi_coefficients',
    'NullCdfLedger',
    'null_cdf_ledger',
    'joint_density_h0',
    'joint_density_h1',
    'log_joint_density_h0',
    'cdf_h0_theorem1',
    'cdf_h0_corollary1',
    'cdf_h0_corollary2',
    'cdf_h0_reciprocal',
    'corollary1_applies',
    'theorem1_converges',
    'cdf_h1_theorem2',
    'theorem2_evaluable',
    'empirical_cdf',
    'cdf_scn_monte_carlo',
    'cdf_scn_bruteforce_quadrature',
    'DEFAULT_DRAWS',
    'DEFAULT_SEED',
    'select_method',
    'evaluate_cdf',
    'evaluate_cdf_grid',
]
