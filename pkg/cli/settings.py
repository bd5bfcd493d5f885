"""
Environment configuration of the command-line tool.

Every variable carries the ``SCNDET_`` prefix. Malformed values are
logged and replaced by the default; explicit command-line flags win over
the environment.
"""

import logging
import os
from dataclasses import dataclass

from fdist.dispatch import DEFAULT_DRAWS, DEFAULT_SEED
from matrand.workers import default_block_size, default_thread_count, env_int

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class Settings:
    threads: int
    log_level: str
    draws: int
    seed: int
    block_size: int

    @classmethod
    def from_env(cls) -> "Settings":
        level = os.getenv("SCNDET_LOG_LEVEL", "INFO").strip().upper()
        if level not in LOG_LEVELS:
            logger.warning(f"Ignoring SCNDET_LOG_LEVEL={level!r}: expected one of {LOG_LEVELS}")
            level = "INFO"
        return cls(
            threads=default_thread_count(),
            log_level=level,
            draws=env_int("SCNDET_DRAWS", DEFAULT_DRAWS),
            seed=env_int("SCNDET_SEED", DEFAULT_SEED, minimum=0),
            block_size=default_block_size(),
        )
