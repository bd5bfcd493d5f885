"""
Validated run configuration for one command-line invocation.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from fdist.types import Method
from matrand.types import ProblemDims, SpikeParams
from specfun.exceptions import DomainError, InputValidationError

from .settings import Settings

COMMANDS = ("cdf", "threshold", "roc", "simulate", "validate")
EXPERIMENTS = ("cdf", "cfar", "robustness")
FORMATS = ("csv", "json")


def _float_or(value, default: float) -> float:
    return default if value is None else float(value)


@dataclass(frozen=True)
class RunConfig:
    """
    Parameter set of one command.

    Every field is checked against the preconditions of the operation the
    command drives before any computation starts.
    """

    command: str
    m: Optional[int] = None
    n: Optional[int] = None
    p: Optional[int] = None
    gamma: float = 0.0
    t_grid: Tuple[float, ...] = ()
    alpha_grid: Tuple[float, ...] = ()
    mu_grid: Tuple[float, ...] = ()
    epsilons: Tuple[float, ...] = (0.0, 0.1, 0.3)
    experiment: str = "cdf"
    draws: int = 100_000
    seed: int = 0
    threads: int = 1
    method: Optional[Method] = None
    output: Optional[str] = None
    fmt: str = "csv"
    plot_script: Optional[str] = None
    quick: bool = False
    sigma: float = 3.0
    inject_tolerance: float = 1.0

    @property
    def dims(self) -> ProblemDims:
        return ProblemDims(self.m, self.n, self.p)

    @property
    def spike(self) -> Optional[SpikeParams]:
        if self.gamma == 0.0:
            return None
        return SpikeParams.along_first_axis(self.m, self.gamma)

    @classmethod
    def from_args(cls, args, settings: Settings) -> "RunConfig":
        """Build and validate a configuration from parsed arguments and environment settings."""
        method = None
        if getattr(args, "method", None):
            try:
                method = Method.parse(args.method)
            except DomainError as exc:
                raise InputValidationError(str(exc)) from exc

        def grid(name: str) -> Tuple[float, ...]:
            values = getattr(args, name, None)
            return tuple(float(v) for v in values) if values else ()

        draws = getattr(args, "draws", None)
        seed = getattr(args, "seed", None)
        threads = getattr(args, "threads", None)
        config = cls(
            command=args.command,
            m=getattr(args, "m", None),
            n=getattr(args, "n", None),
            p=getattr(args, "p", None),
            gamma=float(getattr(args, "gamma", 0.0) or 0.0),
            t_grid=grid("t"),
            alpha_grid=grid("alpha"),
            mu_grid=grid("mu"),
            epsilons=grid("epsilon") or (0.0, 0.1, 0.3),
            experiment=getattr(args, "experiment", None) or "cdf",
            draws=settings.draws if draws is None else draws,
            seed=settings.seed if seed is None else seed,
            threads=settings.threads if threads is None else threads,
            method=method,
            output=getattr(args, "output", None),
            fmt=getattr(args, "format", None) or "csv",
            plot_script=getattr(args, "plot_script", None),
            quick=bool(getattr(args, "quick", False)),
            sigma=_float_or(getattr(args, "sigma", None), 3.0),
            inject_tolerance=_float_or(getattr(args, "inject_tolerance", None), 1.0),
        )
        config.validate()
        return config

    def _require(self, condition: bool, message: str):
        if not condition:
            raise InputValidationError(f"{self.command}: {message}")

    def _validate_dims(self):
        self._require(None not in (self.m, self.n, self.p), "--m, --n and --p are required")
        try:
            self.dims
        except DomainError as exc:
            raise InputValidationError(f"{self.command}: {exc}") from exc

    def _validate_rates(self, values: Tuple[float, ...], flag: str):
        self._require(len(values) > 0, f"{flag} needs at least one value")
        for value in values:
            self._require(0.0 < value < 1.0, f"{flag} values must lie in (0, 1), got {value}")

    def validate(self):
        """
        Raises:
            InputValidationError: naming the violated precondition
        """
        self._require(self.command in COMMANDS, f"unknown command {self.command!r}")
        self._require(self.fmt in FORMATS, f"--format must be one of {FORMATS}, got {self.fmt!r}")
        self._require(self.draws >= 1, f"--draws must be >= 1, got {self.draws}")
        self._require(self.seed >= 0, f"--seed must be >= 0, got {self.seed}")
        self._require(self.threads >= 1, f"--threads must be >= 1, got {self.threads}")
        self._require(math.isfinite(self.gamma) and self.gamma >= 0.0,
                      f"--gamma must be finite and >= 0, got {self.gamma}")
        self._require(self.sigma > 0.0, f"--sigma must be positive, got {self.sigma}")
        self._require(self.inject_tolerance > 0.0,
                      f"--inject-tolerance must be positive, got {self.inject_tolerance}")
        for t in self.t_grid + self.mu_grid:
            self._require(math.isfinite(t) and t > 1.0, f"thresholds must be finite and > 1, got {t}")
        for eps in self.epsilons:
            self._require(math.isfinite(eps) and eps >= 0.0, f"--epsilon values must be >= 0, got {eps}")

        self._require(self.plot_script is None or self.output is not None,
                      "--plot-script needs --output so the script has a data file to read")

        if self.command == "validate":
            return
        self._validate_dims()

        if self.command == "cdf":
            self._require(len(self.t_grid) > 0, "--t needs at least one value")
        elif self.command == "threshold":
            self._validate_rates(self.alpha_grid, "--alpha")
        elif self.command == "roc":
            if not self.mu_grid:
                self._validate_rates(self.alpha_grid, "--alpha")
                self._require(list(self.alpha_grid) == sorted(set(self.alpha_grid)),
                              "--alpha values must be strictly ascending")
        elif self.command == "simulate":
            self._require(self.experiment in EXPERIMENTS,
                          f"--experiment must be one of {EXPERIMENTS}, got {self.experiment!r}")
            if self.experiment == "cdf":
                self._require(len(self.t_grid) > 0, "--t needs at least one value")
            elif self.experiment == "cfar":
                self._require(len(self.mu_grid) > 0 or len(self.alpha_grid) > 0,
                              "cfar needs --mu or --alpha")
                if not self.mu_grid:
                    self._validate_rates(self.alpha_grid, "--alpha")
            else:
                self._require(len(self.alpha_grid) == 1, "robustness needs exactly one --alpha value")
                self._validate_rates(self.alpha_grid, "--alpha")
