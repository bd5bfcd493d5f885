"""
Complex Gaussian, Wishart and F-matrix eigenvalue sampling.

The F-matrix eigenvalues are the generalized eigenvalues of (Ŝ, Σ̂). They
are computed by whitening: factor Σ̂ = L·L†, form L⁻¹·Ŝ·L⁻† and take its
Hermitian eigenvalues. The returned values are the eigenvalues of Ŝ·Σ̂⁻¹.
The eigenvalues of the unscaled W₁·W₂⁻¹ are (n/p) times these, and the SCN
is the same under either convention.
"""

import logging
from typing import Optional, Union

import numpy as np

from specfun.exceptions import DomainError, FactorizationError

from .types import FMatrixSample, HermitianMatrix, ProblemDims, SpikeParams

logger = logging.getLogger(__name__)

CovarianceLike = Union[HermitianMatrix, np.ndarray, None]


def _complex_gaussian(shape, rng: np.random.Generator) -> np.ndarray:
    scale = np.sqrt(0.5)
    return scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def sample_complex_gaussian_matrix(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    """
    Matrix of i.i.d. unit-variance circular complex Gaussian entries.

    Real and imaginary parts are independent N(0, 1/2).
    """
    if rows < 1 or cols < 1:
        raise DomainError(f"matrix shape must be positive, got ({rows}, {cols})")
    return _complex_gaussian((rows, cols), rng)


def sample_wishart(m: int, dof: int, covariance: CovarianceLike, rng: np.random.Generator) -> np.ndarray:
    """
    One draw W = A·X·X†·A† ~ CW_m(dof, covariance), where A·A† = covariance.

    Args:
        m: Dimension
        dof: Degrees of freedom (>= m)
        covariance: Positive definite covariance (identity when None)
        rng: Random stream

    Returns:
        np.ndarray: Hermitian m×m matrix
    """
    if dof < m:
        raise DomainError(f"Wishart degrees of freedom must be >= m, got dof={dof}, m={m}")
    factor = _factor(m, covariance)
    x = factor @ sample_complex_gaussian_matrix(m, dof, rng)
    w = x @ x.conj().T
    return 0.5 * (w + w.conj().T)


def _factor(m: int, covariance: CovarianceLike) -> np.ndarray:
    if covariance is None:
        return np.eye(m, dtype=complex)
    cov = HermitianMatrix.of(covariance)
    if cov.dimension != m:
        raise DomainError(f"covariance dimension {cov.dimension} does not match m={m}")
    return cov.cholesky_factor()


def signal_factor(dims: ProblemDims, spike: Optional[SpikeParams], noise_cov: CovarianceLike) -> np.ndarray:
    """
    Factor B with B·B† equal to the signal-plus-noise covariance.

    Under H1 the covariance is A·(I + γ·v·v†)·A†, with A·A† the noise
    covariance. This is the whitened spiked model mapped back to the
    sensor frame.
    """
    noise = _factor(dims.m, noise_cov)
    if spike is None or spike.is_null:
        return noise
    if spike.dimension != dims.m:
        raise DomainError(f"spike dimension {spike.dimension} does not match m={dims.m}")
    return noise @ np.linalg.cholesky(spike.covariance())


def whitened_eigenvalues(s_hat: np.ndarray, sigma_hat: np.ndarray) -> np.ndarray:
    """
    Ascending eigenvalues of Ŝ·Σ̂⁻¹ for a stack of matrix pairs.

    Args:
        s_hat: (..., m, m) signal-plus-noise sample covariances
        sigma_hat: (..., m, m) noise-only sample covariances

    Returns:
        np.ndarray: (..., m) eigenvalues sorted ascending
    """
    try:
        lower = np.linalg.cholesky(sigma_hat)
    except np.linalg.LinAlgError as exc:
        raise FactorizationError(f"noise sample covariance is not positive definite: {exc}") from exc
    identity = np.broadcast_to(np.eye(lower.shape[-1], dtype=complex), lower.shape)
    inverse = np.linalg.solve(lower, identity)
    psi = inverse @ s_hat @ np.swapaxes(inverse.conj(), -1, -2)
    psi = 0.5 * (psi + np.swapaxes(psi.conj(), -1, -2))
    return np.linalg.eigvalsh(psi)


def f_eigenvalue_block(dims: ProblemDims, draws: int, rng: np.random.Generator,
                       spike: Optional[SpikeParams] = None, noise_cov: CovarianceLike = None,
                       perturbation: float = 0.0) -> np.ndarray:
    """
    Eigenvalues of ``draws`` independent F-matrices from one random stream.

    Args:
        dims: Problem dimensions
        draws: Number of draws
        rng: Random stream
        spike: Spike of the alternative hypothesis, None for H0
        noise_cov: Noise covariance Σ (identity when None)
        perturbation: ε >= 0; the eigenvalues are divided by (1 + ε)

    Returns:
        np.ndarray: (draws, m) ascending eigenvalues of Ŝ·Σ̂⁻¹
    """
    if perturbation < 0:
        raise DomainError(f"perturbation must be >= 0, got {perturbation}")
    m, n, p = dims.m, dims.n, dims.p
    noise = _factor(m, noise_cov)
    signal = signal_factor(dims, spike, noise_cov)

    x_signal = signal @ _complex_gaussian((draws, m, p), rng)
    x_noise = noise @ _complex_gaussian((draws, m, n), rng)
    s_hat = x_signal @ np.swapaxes(x_signal.conj(), -1, -2) / p
    sigma_hat = x_noise @ np.swapaxes(x_noise.conj(), -1, -2) / n

    return apply_perturbation(whitened_eigenvalues(s_hat, sigma_hat), perturbation)


def apply_perturbation(eigenvalues: np.ndarray, epsilon: float) -> np.ndarray:
    """Eigenvalues of the perturbed matrix Ψ̂_ε = Ψ̂ / (1 + ε)."""
    if epsilon < 0:
        raise DomainError(f"perturbation must be >= 0, got {epsilon}")
    if not epsilon:
        return eigenvalues
    return eigenvalues / (1.0 + epsilon)


def sample_f_eigenvalues(dims: ProblemDims, rng: np.random.Generator,
                         spike: Optional[SpikeParams] = None,
                         noise_cov: CovarianceLike = None) -> FMatrixSample:
    """
    Draw p·Ŝ and n·Σ̂ under the chosen hypothesis and return one F-matrix sample.

    Args:
        dims: Problem dimensions
        rng: Random stream
        spike: None (or γ = 0) for H0, the spike for H1
        noise_cov: Noise covariance Σ; the SCN law under H0 does not depend on it

    Returns:
        FMatrixSample: ascending eigenvalues of Ŝ·Σ̂⁻¹
    """
    eigenvalues = f_eigenvalue_block(dims, 1, rng, spike=spike, noise_cov=noise_cov)[0]
    return FMatrixSample(eigenvalues)


def scn_of(sample: Union[FMatrixSample, np.ndarray]) -> Union[float, np.ndarray]:
    """
    Squared condition number λ_max / λ_min.

    Accepts one sample, or an (N, m) array of ascending eigenvalues, in
    which case an array of N values is returned.
    """
    if isinstance(sample, FMatrixSample):
        return sample.scn
    eigenvalues = np.asarray(sample, dtype=float)
    if eigenvalues.ndim == 1:
        return float(eigenvalues[-1] / eigenvalues[0])
    return eigenvalues[..., -1] / eigenvalues[..., 0]
