"""
argparse surface of ``main.py``.
"""

import argparse

from matrand.workers import default_thread_count

from .config import EXPERIMENTS, FORMATS
from .settings import LOG_LEVELS


def _common_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--m', type=int, help='Number of sensors (>= 1)')
    parser.add_argument('--n', type=int, help='Noise-only sample count (>= m)')
    parser.add_argument('--p', type=int, help='Signal-plus-noise sample count (>= m)')
    parser.add_argument('--gamma', type=float, default=0.0,
                        help='Signal-to-noise ratio of the rank-one spike (0 means H0)')
    parser.add_argument('--t', type=float, nargs='+', help='SCN thresholds (> 1)')
    parser.add_argument('--alpha', type=float, nargs='+', help='Target false alarm rates in (0, 1)')
    parser.add_argument('--mu', type=float, nargs='+', help='Detector thresholds (> 1)')
    parser.add_argument('--draws', type=int, default=None,
                        help='Monte Carlo draws (default: SCNDET_DRAWS or 100000)')
    parser.add_argument('--seed', type=int, default=None, help='Root seed (default: SCNDET_SEED)')
    parser.add_argument('--threads', type=int, default=None,
                        help=f'Worker threads (default: SCNDET_THREADS or {default_thread_count()})')
    parser.add_argument('--method', type=str, default=None,
                        help='Force an evaluation method, e.g. Theorem1, Corollary2, MonteCarlo')
    parser.add_argument('--output', type=str, default=None, help='Output file (default: stdout)')
    parser.add_argument('--format', type=str, choices=FORMATS, default='csv', help='Output format')
    parser.add_argument('--plot-script', type=str, default=None,
                        help='Also write a gnuplot script reading --output')
    parser.add_argument('--log-level', type=str, choices=LOG_LEVELS, default=None,
                        help='Logging level (default: SCNDET_LOG_LEVEL or INFO)')
    return parser


def build_parser() -> argparse.ArgumentParser:
    """Parser with the cdf, threshold, roc, simulate and validate subcommands."""
    common = _common_parser()
    parser = argparse.ArgumentParser(
        description='Exact and simulated distribution of the squared condition number of complex '
                    'F-matrices, and the CFAR detector built on it'
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    subparsers.add_parser('cdf', parents=[common], help='Evaluate F(t) on a threshold grid')
    subparsers.add_parser('threshold', parents=[common], help='Threshold for target false alarm rates')
    subparsers.add_parser('roc', parents=[common], help='Receiver operating characteristic points')

    simulate = subparsers.add_parser('simulate', parents=[common], help='Monte Carlo experiments')
    simulate.add_argument('--experiment', type=str, choices=EXPERIMENTS, default='cdf',
                          help='cdf: empirical vs exact; cfar: noise covariance sweep; '
                               'robustness: perturbation sweep')
    simulate.add_argument('--epsilon', type=float, nargs='+', default=None,
                          help='Perturbation levels of the robustness sweep (>= 0)')

    validate = subparsers.add_parser('validate', parents=[common], help='Run the acceptance suite')
    validate.add_argument('--quick', action='store_true', help='Use 10000 Monte Carlo draws')
    validate.add_argument('--sigma', type=float, default=3.0, help='Monte Carlo band in standard errors')
    validate.add_argument('--inject-tolerance', type=float, default=1.0,
                          help='Multiply every tolerance by this factor')
    return parser
