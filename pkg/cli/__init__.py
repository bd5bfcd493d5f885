"""
Command-Line Package

Everything behind ``main.py``:

1. Settings, RunConfig - environment settings and validated per-command parameters
2. build_parser - argparse surface with the cdf, threshold, roc, simulate and validate subcommands
3. Table, write_table - deterministic CSV and JSON output
4. PlotScriptWriter - gnuplot scripts rendered from jinja2 templates
5. ValidationSuite - acceptance checks of the validate command
6. run_command - command dispatch and exit codes
"""

from .settings import Settings
from .config import RunConfig
from .parser import build_parser
from .output import Table, render_csv, render_json, write_table
from .plots import PlotScriptWriter
from .validation import CheckResult, ValidationSuite
from .commands import (
    EXIT_OK,
    EXIT_VALIDATION_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_NON_CONVERGENCE,
    reference_covariances,
    run_command,
)

__all__ = [
    'Settings',
    'RunConfig',
    'build_parser',
    'Table',
    'render_csv',
    'render_json',
    'write_table',
    'PlotScriptWriter',
    'CheckResult',
    'ValidationSuite',
    'EXIT_OK',
    'EXIT_VALIDATION_FAILED',
    'EXIT_INPUT_ERROR',
    'EXIT_NON_CONVERGENCE',
    'reference_covariances',
    'run_command',
]
