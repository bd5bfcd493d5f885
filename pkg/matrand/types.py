"""
Domain types for the F-matrix sampling engine.

ProblemDims carries the shape (m, n, p) of every formula in the project,
together with the derived exponents α, β, τ, ν and m̃.
"""

from dataclasses import dataclass, field
from typing import Union

import numpy as np

from specfun.exceptions import DomainError, FactorizationError

HERMITIAN_TOL = 1e-12


def _positive_int(name: str, value) -> int:
    if isinstance(value, bool) or int(value) != value or value < 1:
        raise DomainError(f"{name} must be a positive integer, got {value}")
    return int(value)


@dataclass(frozen=True)
class ProblemDims:
    """
    Sensor dimension and sample counts.

    Args:
        m: Sensor dimension
        n: Number of noise-only samples (n >= m)
        p: Number of signal-plus-noise samples (p >= m)
    """

    m: int
    n: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "m", _positive_int("m", self.m))
        object.__setattr__(self, "n", _positive_int("n", self.n))
        object.__setattr__(self, "p", _positive_int("p", self.p))
        if self.n < self.m or self.p < self.m:
            raise DomainError(
                f"sample counts must satisfy n >= m and p >= m, got m={self.m}, n={self.n}, p={self.p}"
            )

    @property
    def alpha(self) -> int:
        return self.n - self.m

    @property
    def beta(self) -> int:
        return self.p - self.m

    @property
    def tau(self) -> int:
        return (self.m + self.alpha) * (self.m + self.beta)

    @property
    def nu(self) -> int:
        return self.m * (self.beta + self.m)

    @property
    def m_tilde(self) -> int:
        return self.m * self.m - self.m + 1

    @property
    def is_square(self) -> bool:
        """True when m = n = p."""
        return self.alpha == 0 and self.beta == 0

    def swapped(self) -> "ProblemDims":
        """Dimensions with the roles of the two sample counts exchanged."""
        return ProblemDims(self.m, self.p, self.n)

    def __str__(self) -> str:
        return f"(m={self.m}, n={self.n}, p={self.p})"


@dataclass(frozen=True, eq=False)
class SpikeParams:
    """
    Rank-one spike of the alternative hypothesis, I + γ·v·v†.

    Args:
        gamma: Equivalent signal-to-noise ratio (>= 0)
        v: Unit vector in C^m
    """

    gamma: float
    v: np.ndarray

    def __post_init__(self):
        if not self.gamma >= 0:
            raise DomainError(f"spike gamma must be >= 0, got {self.gamma}")
        v = np.asarray(self.v, dtype=complex).reshape(-1)
        if abs(np.linalg.norm(v) - 1.0) > 1e-12:
            raise DomainError(f"spike direction must have unit norm, got {np.linalg.norm(v)}")
        object.__setattr__(self, "gamma", float(self.gamma))
        object.__setattr__(self, "v", v)

    @classmethod
    def along_first_axis(cls, m: int, gamma: float) -> "SpikeParams":
        """Spike along e₁, the canonical direction used for H1 sampling."""
        v = np.zeros(m, dtype=complex)
        v[0] = 1.0
        return cls(gamma, v)

    @property
    def dimension(self) -> int:
        return self.v.shape[0]

    @property
    def is_null(self) -> bool:
        return self.gamma == 0.0

    def covariance(self) -> np.ndarray:
        """The whitened signal-plus-noise covariance I + γ·v·v†."""
        m = self.dimension
        return np.eye(m, dtype=complex) + self.gamma * np.outer(self.v, self.v.conj())


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """A complex Hermitian matrix, checked on construction."""

    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=complex)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise DomainError(f"Hermitian matrix must be square, got shape {values.shape}")
        scale = max(1.0, float(np.max(np.abs(values))) if values.size else 1.0)
        if not np.allclose(values, values.conj().T, rtol=0.0, atol=HERMITIAN_TOL * scale):
            raise DomainError("matrix is not Hermitian")
        object.__setattr__(self, "values", values)

    @classmethod
    def identity(cls, m: int) -> "HermitianMatrix":
        return cls(np.eye(m, dtype=complex))

    @classmethod
    def of(cls, matrix: Union["HermitianMatrix", np.ndarray]) -> "HermitianMatrix":
        return matrix if isinstance(matrix, HermitianMatrix) else cls(matrix)

    @property
    def dimension(self) -> int:
        return self.values.shape[0]

    def cholesky_factor(self) -> np.ndarray:
        """
        Lower-triangular L with L·L† equal to this matrix.

        Raises:
            FactorizationError: if the matrix is not positive definite
        """
        try:
            return np.linalg.cholesky(self.values)
        except np.linalg.LinAlgError as exc:
            raise FactorizationError(f"covariance is not positive definite: {exc}") from exc


@dataclass(frozen=True, eq=False)
class FMatrixSample:
    """Ordered eigenvalues of one F-matrix draw."""

    eigenvalues: np.ndarray = field(repr=False)

    def __post_init__(self):
        eig = np.asarray(self.eigenvalues, dtype=float).reshape(-1)
        if eig.size == 0:
            raise DomainError("an F-matrix sample needs at least one eigenvalue")
        if np.any(np.diff(eig) < 0):
            raise DomainError("eigenvalues must be sorted ascending")
        if not eig[0] > 0:
            raise DomainError(f"eigenvalues must be positive, smallest is {eig[0]}")
        object.__setattr__(self, "eigenvalues", eig)

    @property
    def lambda_max(self) -> float:
        return float(self.eigenvalues[-1])

    @property
    def scn(self) -> float:
        return float(self.eigenvalues[-1] / self.eigenvalues[0])
