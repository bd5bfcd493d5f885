"""
Random Matrix Package

Complex Gaussian and Wishart sampling for the F-matrix statistics:

1. ProblemDims, SpikeParams, HermitianMatrix, FMatrixSample - domain types
2. sample_complex_gaussian_matrix, sample_wishart - building blocks
3. sample_f_eigenvalues, scn_of - one F-matrix draw and its SCN
4. BatchSampler - seeded block-parallel driver for Monte Carlo work
"""

from .types import ProblemDims, SpikeParams, HermitianMatrix, FMatrixSample
from .sampling import (
    sample_complex_gaussian_matrix,
    sample_wishart,
    sample_f_eigenvalues,
    f_eigenvalue_block,
    apply_perturbation,
    whitened_eigenvalues,
    scn_of,
)
from .batch import BatchSampler, Seed, sample_scn_batch
from .workers import env_int, default_thread_count, default_block_size

__all__ = [
    'ProblemDims',
    'SpikeParams',
    'HermitianMatrix',
    'FMatrixSample',
    'sample_complex_gaussian_matrix',
    'sample_wishart',
    'sample_f_eigenvalues',
    'f_eigenvalue_block',
    'apply_perturbation',
    'whitened_eigenvalues',
    'scn_of',
    'BatchSampler',
    'Seed',
    'sample_scn_batch',
    'env_int',
    'default_thread_count',
    'default_block_size',
]
