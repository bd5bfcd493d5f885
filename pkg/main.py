#!/usr/bin/env python3
"""
SCN Detector

Exact and Monte Carlo distribution of the squared condition number of
complex F-matrices, and the CFAR detector built on it.

    python main.py cdf --m 3 --n 4 --p 5 --t 2 5 10
    python main.py threshold --m 3 --n 3 --p 3 --alpha 0.01 0.05
    python main.py roc --m 2 --n 2 --p 2 --gamma 1.5 --alpha 0.01 0.05 0.1
    python main.py simulate --experiment cfar --m 3 --n 4 --p 5 --alpha 0.05
    python main.py validate --quick
"""
import logging
import sys
from typing import List, Optional

from cli import RunConfig, Settings, build_parser, run_command
from cli.commands import EXIT_INPUT_ERROR
from specfun import InputValidationError


def setup_logging(level: str):
    """Set up logging configuration; records go to stderr so stdout stays data only."""
    logging.basicConfig(
        level=getattr(logging, level),
        format='%(asctime)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
        force=True,
    )


def parse_arguments(argv: Optional[List[str]] = None):
    """Parse command line arguments"""
    return build_parser().parse_args(argv)


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit code"""
    args = parse_arguments(argv)
    settings = Settings.from_env()
    setup_logging(args.log_level or settings.log_level)

    try:
        config = RunConfig.from_args(args, settings)
    except InputValidationError as exc:
        logging.error(f"Invalid arguments: {exc}")
        return EXIT_INPUT_ERROR

    logging.info(f"Running {config.command} with seed {config.seed} on {config.threads} threads "
                 f"(block size {settings.block_size})")
    return run_command(config)


if __name__ == "__main__":
    sys.exit(main())
