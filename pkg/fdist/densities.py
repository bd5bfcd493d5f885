"""
Joint densities of the ordered F-matrix eigenvalues.

Both densities are evaluated in log space. The H1 density contains a sum
with alternating signs; the ratio Δ²(λ)/Π_{j≠k}(λ_k − λ_j) is rewritten as
Π_{j≠k}(λ_k − λ_j)·Δ²(λ without λ_k) so coincident eigenvalues give an
exact zero instead of 0/0.
"""

import math

import numpy as np

from matrand.types import ProblemDims
from specfun.exceptions import DomainError
from specfun.summation import signed_exp_sum

from .constants import log_f_normalization, log_spiked_normalization


def _checked_eigenvalues(dims: ProblemDims, eigenvalues) -> np.ndarray:
    lam = np.asarray(eigenvalues, dtype=float).reshape(-1)
    if lam.size != dims.m:
        raise DomainError(f"expected {dims.m} eigenvalues, got {lam.size}")
    if not np.all(np.isfinite(lam)) or np.any(lam <= 0):
        raise DomainError(f"eigenvalues must be finite and positive, got {lam}")
    if np.any(np.diff(lam) < 0):
        raise DomainError(f"eigenvalues must be sorted ascending, got {lam}")
    return lam


def _log_vandermonde_squared(lam: np.ndarray) -> float:
    i, j = np.triu_indices(lam.size, k=1)
    gaps = lam[j] - lam[i]
    if np.any(gaps == 0):
        return -math.inf
    return 2.0 * float(np.sum(np.log(gaps)))


def log_joint_density_h0(dims: ProblemDims, eigenvalues) -> float:
    """
    ln f₀(λ); -inf when two eigenvalues coincide.

    f₀(λ) = 𝒦 · Π λ_i^{p−m} / (1 + λ_i)^{p+n} · Δ²(λ)
    """
    lam = _checked_eigenvalues(dims, eigenvalues)
    log_vandermonde = _log_vandermonde_squared(lam)
    if log_vandermonde == -math.inf:
        return -math.inf
    return (log_f_normalization(dims)
            + dims.beta * float(np.sum(np.log(lam)))
            - (dims.p + dims.n) * float(np.sum(np.log1p(lam)))
            + log_vandermonde)


def joint_density_h0(dims: ProblemDims, eigenvalues) -> float:
    """Joint density of the ordered eigenvalues under H0 (no signal)."""
    return math.exp(log_joint_density_h0(dims, eigenvalues))


def joint_density_h1(dims: ProblemDims, gamma: float, eigenvalues) -> float:
    """
    Joint density of the ordered eigenvalues under the rank-one spiked alternative.

    Args:
        dims: Problem dimensions
        gamma: Spike strength γ > 0
        eigenvalues: m ascending positive eigenvalues

    Returns:
        float: f₁(λ; γ)
    """
    if not gamma > 0 or not math.isfinite(gamma):
        raise DomainError(f"spike strength must be positive and finite, got {gamma}")
    lam = _checked_eigenvalues(dims, eigenvalues)
    m = dims.m
    total = dims.p + dims.n
    prefactor = (log_spiked_normalization(dims)
                 - (m - 1) * math.log(gamma)
                 - (dims.p + 1 - m) * math.log1p(gamma)
                 + dims.beta * float(np.sum(np.log(lam)))
                 - (total - 1) * float(np.sum(np.log1p(lam))))
    signs = np.empty(m)
    logs = np.empty(m)
    indices = np.arange(m)
    with np.errstate(divide="ignore"):
        for k in range(m):
            others = lam[indices != k]
            gaps = lam[k] - others
            signs[k] = (-1.0) ** (m - 1 - k)
            logs[k] = (prefactor + (total - 1) * math.log1p(lam[k])
                       + float(np.sum(np.log(np.abs(gaps))))
                       + _log_vandermonde_squared(others)
                       - (total + 1 - m) * math.log1p(lam[k] / (gamma + 1.0)))
    return signed_exp_sum(signs, logs).value
