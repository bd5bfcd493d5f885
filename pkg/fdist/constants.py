"""
Normalisation constants and the coefficient ledger of the null c.d.f.

The null c.d.f. reduces to a one-dimensional y-integral whose integrand is
a sum over index tuples. Each tuple contributes a small determinant built
from expansion coefficients of the monic Jacobi polynomials orthogonal to
v² on [0, 1], evaluated at the two eigen-points

    c₁ = -(1+ty)/(t-1)   (β rows, signal side)
    c₂ = (1+ty)/(y(t-1)) (α rows, noise side)

The y- and t-dependence of a tuple only enters through the index sums
J₁ (signal rows) and J₂ (noise rows), so tuple determinants are
aggregated per (J₁, J₂) once per problem shape and cached.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import special

from matrand.types import ProblemDims
from specfun.exceptions import NotEvaluableError
from specfun.gamma import complex_mv_ln_gamma, log_factorial, pochhammer_ln

from .types import row_bounds, row_orders

logger = logging.getLogger(__name__)

MAX_INDEX_TUPLES = 2_000_000


def log_f_normalization(dims: ProblemDims) -> float:
    """
    ln 𝒦_{m,n,p} = ln[π^{m(m-1)} Γ̃_m(n+p) / (Γ̃_m(m) Γ̃_m(n) Γ̃_m(p))].
    """
    m = dims.m
    return math.fsum([
        m * (m - 1) * math.log(math.pi),
        complex_mv_ln_gamma(m, dims.n + dims.p),
        -complex_mv_ln_gamma(m, m),
        -complex_mv_ln_gamma(m, dims.n),
        -complex_mv_ln_gamma(m, dims.p),
    ])


def log_spiked_normalization(dims: ProblemDims) -> float:
    """ln 𝒦̃_{m,n,p} = ln[(m-1)! (p+n-m)! / (p+n-1)!] + ln 𝒦_{m,n,p}."""
    total = dims.p + dims.n
    return (log_factorial(dims.m - 1) + log_factorial(total - dims.m)
            - log_factorial(total - 1) + log_f_normalization(dims))


def log_selberg_constant(m: int) -> float:
    """ln Π_{j=0}^{m-2} j!(j+1)!(j+2)!/(m+j+1)!, the (m-1)-fold integral of Π v_i² Δ²(v) on [0,1]."""
    return math.fsum(
        log_factorial(j) + log_factorial(j + 1) + log_factorial(j + 2) - log_factorial(m + j + 1)
        for j in range(m - 1)
    )


def jacobi_coefficients(max_degree: int) -> np.ndarray:
    """
    Coefficients f[d, s] of π_d(v) = Σ_s f[d, s] (1-v)^s.

    π_d is the monic polynomial of degree d orthogonal to v² on [0, 1]:
    f[d, s] = d!/(d+3)_d · (-d)_s (d+3)_s / (s!)².
    """
    table = np.zeros((max_degree + 1, max_degree + 1))
    for d in range(max_degree + 1):
        lead = log_factorial(d) - pochhammer_ln(d + 3, d).ln_magnitude
        for s in range(d + 1):
            log_mag = (lead + log_factorial(d) - log_factorial(d - s)
                       + pochhammer_ln(d + 3, s).ln_magnitude - 2.0 * log_factorial(s))
            table[d, s] = (-1) ** s * math.exp(log_mag)
    return table


@dataclass(frozen=True)
class NullCdfLedger:
    """
    Per-shape constants of the null c.d.f.

    Attributes:
        log_c0, sign_c0: 𝒦_{m,n,p}/(m-1)! · Z_{m-1} · (-1)^{(m-1)β}
        exponent: E = τ - α - β - 1, the power of the interval length
        signal_sums, noise_sums: (J₁, J₂) of every aggregated group
        coefficients: Σ of tuple determinants within each group
        tuple_count: number of index tuples enumerated
    """

    dims: ProblemDims
    log_c0: float
    sign_c0: int
    exponent: int
    signal_sums: np.ndarray
    noise_sums: np.ndarray
    coefficients: np.ndarray
    tuple_count: int


def _row_tables(dims: ProblemDims, table: np.ndarray):
    """Entry rows f[d_c, r+j] · C(r+j, r) · (-1)^r for every admissible j, per row."""
    n_cols = dims.alpha + dims.beta
    degrees = np.arange(n_cols) + dims.m - 1
    rows = []
    for order, bound in zip(row_orders(dims), row_bounds(dims)):
        powers = order + np.arange(bound + 1)
        binomials = special.comb(powers, order, exact=False)
        entries = table[degrees[None, :], powers[:, None]] * binomials[:, None] * (-1) ** order
        rows.append(entries)
    return rows


@lru_cache(maxsize=64)
def null_cdf_ledger(dims: ProblemDims) -> NullCdfLedger:
    """
    Build (and cache) the coefficient ledger for a problem shape.

    Raises:
        NotEvaluableError: when the tuple enumeration exceeds MAX_INDEX_TUPLES
    """
    m, alpha, beta = dims.m, dims.alpha, dims.beta
    n_rows = alpha + beta
    log_c0 = log_f_normalization(dims) - log_factorial(m - 1) + log_selberg_constant(m)
    sign_c0 = -1 if ((m - 1) * beta) % 2 else 1
    exponent = dims.tau - alpha - beta - 1

    if n_rows == 0:
        return NullCdfLedger(dims, log_c0, sign_c0, exponent,
                             np.zeros(1, dtype=int), np.zeros(1, dtype=int), np.ones(1), 1)

    bounds = row_bounds(dims)
    tuple_count = math.prod(b + 1 for b in bounds)
    if tuple_count > MAX_INDEX_TUPLES:
        raise NotEvaluableError(
            f"{tuple_count} index tuples for {dims} exceed the enumeration cap",
            diagnostics={"tuples": tuple_count, "cap": MAX_INDEX_TUPLES},
        )

    table = jacobi_coefficients(m + n_rows - 2)
    rows = _row_tables(dims, table)
    tuples = np.array(list(itertools.product(*[range(b + 1) for b in bounds])), dtype=int)
    matrices = np.stack([rows[i][tuples[:, i]] for i in range(n_rows)], axis=1)
    determinants = np.linalg.det(matrices)

    signal_sums = tuples[:, :beta].sum(axis=1)
    noise_sums = tuples[:, beta:].sum(axis=1)
    keys = np.stack([signal_sums, noise_sums], axis=1)
    groups, inverse = np.unique(keys, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    coefficients = np.array([math.fsum(determinants[inverse == g]) for g in range(len(groups))])

    logger.debug(f"Null ledger for {dims}: {tuple_count} tuples in {len(groups)} groups")
    return NullCdfLedger(dims, log_c0, sign_c0, exponent,
                         groups[:, 0].copy(), groups[:, 1].copy(), coefficients, tuple_count)
