import logging
import os
from typing import Optional

import psutil

from specfun.exceptions import DomainError

logger = logging.getLogger(__name__)

DEFAULT_BLOCK_SIZE = 4096


def env_int(name: str, default: int, minimum: int = 1) -> int:
    """Integer environment value, or ``default`` when unset or malformed."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring {name}={raw!r}: not an integer")
        return default
    if value < minimum:
        logger.warning(f"Ignoring {name}={raw!r}: must be >= {minimum}")
        return default
    return value


def default_thread_count() -> int:
    """
    Worker count used when the caller does not pass one.

    Reads ``SCNDET_THREADS`` and falls back to the number of physical
    cores reported by psutil.
    """
    cores = psutil.cpu_count(logical=False) or os.cpu_count() or 1
    return env_int("SCNDET_THREADS", cores)


def default_block_size() -> int:
    """Draws per random-number block (``SCNDET_BLOCK_SIZE``)."""
    return env_int("SCNDET_BLOCK_SIZE", DEFAULT_BLOCK_SIZE)


def resolve_threads(threads: Optional[int]) -> int:
    if threads is None:
        return default_thread_count()
    if threads < 1:
        raise DomainError(f"threads must be >= 1, got {threads}")
    return int(threads)
