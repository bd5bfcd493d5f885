"""
Seeded, block-parallel F-matrix sampling.

Draws are split into fixed-size blocks. Block i always consumes the i-th
child of ``SeedSequence(seed)`` through a Philox generator, and blocks are
merged in block order. The sample stream is therefore a function of
(seed, block size) only, whatever the number of worker threads.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence, Union

import numpy as np

from specfun.exceptions import DomainError

from .sampling import CovarianceLike, f_eigenvalue_block, scn_of
from .types import ProblemDims, SpikeParams
from .workers import default_block_size, resolve_threads

Seed = Union[int, Sequence[int]]


class BatchSampler:
    """
    Parallel driver producing F-matrix eigenvalues for many draws.

    Args:
        dims: Problem dimensions
        spike: Spike of the alternative hypothesis, None for H0
        noise_cov: Noise covariance Σ (identity when None)
        threads: Worker threads (``SCNDET_THREADS`` / physical cores when None)
        block_size: Draws per random stream (``SCNDET_BLOCK_SIZE`` when None)
    """

    def __init__(self, dims: ProblemDims, spike: Optional[SpikeParams] = None,
                 noise_cov: CovarianceLike = None, threads: Optional[int] = None,
                 block_size: Optional[int] = None):
        self.logger = logging.getLogger(self.__class__.__name__)
        self.dims = dims
        self.spike = spike
        self.noise_cov = noise_cov
        self.threads = resolve_threads(threads)
        self.block_size = int(block_size) if block_size else default_block_size()
        if self.block_size < 1:
            raise DomainError(f"block_size must be >= 1, got {block_size}")

    def _block(self, seed_sequence: np.random.SeedSequence, size: int, perturbation: float) -> np.ndarray:
        rng = np.random.Generator(np.random.Philox(seed_sequence))
        return f_eigenvalue_block(
            self.dims, size, rng,
            spike=self.spike, noise_cov=self.noise_cov, perturbation=perturbation,
        )

    def eigenvalues(self, draws: int, seed: Seed, perturbation: float = 0.0) -> np.ndarray:
        """
        Ascending eigenvalues of Ŝ·Σ̂⁻¹ for ``draws`` independent draws.

        Args:
            draws: Number of draws (>= 1)
            seed: Root seed, or a sequence of ints such as (seed, stream)
            perturbation: ε >= 0 applied as Ψ̂_ε = Ψ̂ / (1 + ε)

        Returns:
            np.ndarray: (draws, m) array
        """
        if draws < 1:
            raise DomainError(f"draws must be >= 1, got {draws}")
        n_blocks = math.ceil(draws / self.block_size)
        children = np.random.SeedSequence(seed).spawn(n_blocks)
        sizes = [min(self.block_size, draws - i * self.block_size) for i in range(n_blocks)]

        self.logger.debug(
            f"Sampling {draws} draws for {self.dims} in {n_blocks} blocks on {self.threads} threads"
        )
        if self.threads == 1 or n_blocks == 1:
            blocks = [self._block(child, size, perturbation) for child, size in zip(children, sizes)]
        else:
            with ThreadPoolExecutor(max_workers=self.threads) as executor:
                blocks = list(executor.map(
                    lambda job: self._block(job[0], job[1], perturbation), zip(children, sizes)
                ))
        return np.concatenate(blocks, axis=0)

    def scn(self, draws: int, seed: Seed, perturbation: float = 0.0) -> np.ndarray:
        """SCN values for ``draws`` draws."""
        return scn_of(self.eigenvalues(draws, seed, perturbation))


def sample_scn_batch(dims: ProblemDims, draws: int, seed: Seed, spike: Optional[SpikeParams] = None,
                     noise_cov: CovarianceLike = None, threads: Optional[int] = None,
                     perturbation: float = 0.0) -> np.ndarray:
    """Convenience wrapper returning ``draws`` SCN values."""
    sampler = BatchSampler(dims, spike=spike, noise_cov=noise_cov, threads=threads)
    return sampler.scn(draws, seed, perturbation)
