"""
Compensated summation of signed terms stored as (sign, log-magnitude).
"""

import math
from typing import Iterable, NamedTuple, Sequence

import numpy as np


class SignedSum(NamedTuple):
    """Result of a compensated signed sum.

    ``abs_sum`` is the sum of the absolute values of the terms, which bounds
    the amplification of relative term errors through cancellation.
    """

    value: float
    abs_sum: float
    max_log: float


def signed_exp_sum(signs: Sequence[float], logs: Sequence[float]) -> SignedSum:
    """
    Sum ``Σ sign_i · exp(log_i)`` with a shared scale and ``math.fsum``.

    Terms are added in descending magnitude.
    """
    signs = np.asarray(signs, dtype=float)
    logs = np.asarray(logs, dtype=float)
    live = (signs != 0) & np.isfinite(logs)
    if not np.any(live):
        return SignedSum(0.0, 0.0, -math.inf)
    signs = signs[live]
    logs = logs[live]
    peak = float(np.max(logs))
    order = np.argsort(logs)[::-1]
    scaled = np.exp(logs[order] - peak)
    total = math.fsum(signs[order] * scaled)
    magnitude = math.fsum(scaled)
    return SignedSum(total * math.exp(peak), magnitude * math.exp(peak), peak)


def compensated_sum(values: Iterable[float]) -> float:
    """Sum values in descending magnitude with ``math.fsum``."""
    ordered = sorted(values, key=abs, reverse=True)
    return math.fsum(ordered)
