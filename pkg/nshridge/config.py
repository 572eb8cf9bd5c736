"""Run configuration: TOML file values overridden by command line flags."""

from collections.abc import Mapping, Sequence
from dataclasses import asdict, dataclass, field, fields, replace
import logging
import math
from pathlib import Path
import sys
from typing import Any, NoReturn

from .descent import DescentOptions
from .domain import DomainKind, DomainSpec, make_domain
from .equilibria import SOBOLEV_OPTIONS
from .exceptions import ConfigurationError, NshError
from .lattice import LatticeSpec, parse_exact
from .nehari import SolverOptions
from .params import Params

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

# Get logger
logger = logging.getLogger(__name__)

DEFAULT_DOMAIN = "box:8*pi,8*pi"

_NUMBER_KEYS = ("alpha", "beta", "gtol", "ftol")
_INTEGER_KEYS = (
    "modes",
    "grid",
    "starts",
    "seed",
    "max_iterations",
    "window",
    "sobolev_starts",
    "sobolev_max_iterations",
)


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _check_types(values: Mapping[str, Any]) -> None:
    """Reject values of the wrong type, such as `gtol = "x"` in a TOML file.

    Raises:
        ConfigurationError: Naming the first mistyped key.
    """

    def fail(key: str, expected: str) -> NoReturn:
        raise ConfigurationError(f"{key} must be {expected}, got {values[key]!r}")

    for key, value in values.items():
        if value is None:
            continue
        if key in _NUMBER_KEYS and not _is_number(value):
            fail(key, "a number")
        elif key in _INTEGER_KEYS and not (isinstance(value, int) and not isinstance(value, bool)):
            fail(key, "an integer")
        elif key == "domain" and not isinstance(value, str):
            fail(key, "a domain string")
        elif key == "R" and not (_is_number(value) or isinstance(value, str)):
            fail(key, "a number or expression")
        elif key == "sweep" and not (
            isinstance(value, list) and all(_is_number(v) or isinstance(v, str) for v in value)
        ):
            fail(key, "a list of numbers or expressions")
        elif key == "counts" and not (
            isinstance(value, list)
            and all(isinstance(c, int) and not isinstance(c, bool) for c in value)
        ):
            fail(key, "a list of integers")
        elif key == "out" and not isinstance(value, (str, Path)):
            fail(key, "a path")
        elif key == "emit_pgm" and not isinstance(value, bool):
            fail(key, "true or false")


def _exact_float(value: Any, name: str) -> float:
    """Float from a number or an exact expression such as `8*pi`."""
    if isinstance(value, bool):
        raise ConfigurationError(f"{name} must be a number, got {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        try:
            return float(parse_exact(value))
        except NshError as e:
            raise ConfigurationError(f"Invalid {name} '{value}': {e}") from e
    raise ConfigurationError(f"{name} must be a number or expression, got {value!r}")


def parse_domain(text: str, R: float = 1.0) -> DomainSpec:
    """Parse `box:L1[,L2[,L3]]`, `torus:[[..]]`, `torus:hex` or `torus:square`.

    Raises:
        ConfigurationError: For malformed text or invalid geometry.
    """
    kind, sep, body = text.partition(":")
    kind = kind.strip().lower()
    if not sep or not body.strip():
        raise ConfigurationError(f"Domain '{text}' must look like 'box:...' or 'torus:...'")
    if kind == DomainKind.BOX.value:
        lengths = [_exact_float(part, "box length") for part in body.split(",")]
        return make_domain(DomainKind.BOX, lengths, R)
    if kind == DomainKind.TORUS.value:
        try:
            lattice = LatticeSpec.parse(body.strip())
        except NshError as e:
            raise ConfigurationError(f"Invalid torus generators '{body}': {e}") from e
        return make_domain(DomainKind.TORUS, lattice.float_rows(), R)
    raise ConfigurationError(f"Unknown domain kind '{kind}' in '{text}'")


@dataclass
class RunConfig:
    """Parameters, domain, discretization, solver and output settings of one run."""

    alpha: float | None = None
    beta: float | None = None
    domain: str = DEFAULT_DOMAIN
    """Domain text, see parse_domain()."""

    R: float | str = 1.0
    """Stretch factor, a number or exact expression."""

    modes: int | None = None
    grid: int | None = None
    starts: int = 12
    seed: int = 0
    max_iterations: int = 20000
    gtol: float = 1e-6
    ftol: float = 1e-12
    window: int = 25
    sobolev_starts: int = 8
    sobolev_max_iterations: int = 5000
    sweep: list[float | str] = field(default_factory=lambda: [1.0, 2.0, 4.0, 8.0])
    counts: list[int] | None = None
    out: Path = Path(".")
    emit_pgm: bool = False

    @classmethod
    def keys(cls) -> list[str]:
        """Accepted configuration keys."""
        return [f.name for f in fields(cls)]

    @classmethod
    def from_sources(
        cls, file_values: Mapping[str, Any] | None = None, **overrides: Any
    ) -> "RunConfig":
        """Merge file values and flag overrides; flags given as None do not override.

        Raises:
            ConfigurationError: For unknown keys or values of the wrong type.
        """
        merged: dict[str, Any] = dict(file_values or {})
        merged.update({key: value for key, value in overrides.items() if value is not None})
        unknown = sorted(set(merged) - set(cls.keys()))
        if unknown:
            raise ConfigurationError(f"Unknown configuration keys: {', '.join(unknown)}")
        _check_types(merged)
        for key in _NUMBER_KEYS:
            if merged.get(key) is not None:
                merged[key] = float(merged[key])
        if "out" in merged:
            merged["out"] = Path(merged["out"])
        return cls(**merged)

    @property
    def stretch(self) -> float:
        """Stretch factor as a float."""
        return _exact_float(self.R, "R")

    def domain_spec(self) -> DomainSpec:
        """Parsed, stretched domain."""
        return parse_domain(self.domain, self.stretch)

    def params(self) -> Params:
        """Equation parameters.

        Raises:
            ConfigurationError: If α or β is missing.
        """
        if self.alpha is None or self.beta is None:
            raise ConfigurationError("Both alpha and beta are required")
        return Params(self.alpha, self.beta)

    def solver_options(self, threads: int | None = None) -> SolverOptions:
        """Options of the ridge solver."""
        return SolverOptions(
            starts=self.starts,
            seed=self.seed,
            max_iterations=self.max_iterations,
            gtol=self.gtol,
            ftol=self.ftol,
            window=self.window,
            threads=threads,
        )

    def sobolev_options(self) -> DescentOptions:
        """Options of the Sobolev quotient searches."""
        return replace(SOBOLEV_OPTIONS, max_iterations=self.sobolev_max_iterations)

    def validate(self, require_params: bool = True) -> "RunConfig":
        """Check every setting before any compute or file is created.

        Args:
            require_params: Whether α and β must be present.

        Returns:
            self, for chaining.

        Raises:
            ConfigurationError: For the first invalid setting found.
        """
        if require_params:
            self.params()
        domain = self.domain_spec()
        for name in ("modes", "grid"):
            value = getattr(self, name)
            if value is not None and (not isinstance(value, int) or value < 1):
                raise ConfigurationError(f"{name} must be a positive integer, got {value}")
        if not isinstance(self.sobolev_starts, int) or self.sobolev_starts < 0:
            raise ConfigurationError(f"sobolev_starts must be >= 0, got {self.sobolev_starts}")
        self.solver_options()
        self.sobolev_options()
        if not self.sweep:
            raise ConfigurationError("Stretch sweep must not be empty")
        if any(not (math.isfinite(R) and R >= 1.0) for R in self.sweep_values()):
            raise ConfigurationError(f"Sweep stretch factors must be >= 1, got {self.sweep}")
        if self.counts is not None:
            self.tile_counts(domain.dimension)
        return self

    def sweep_values(self) -> list[float]:
        """Sweep stretch factors as floats."""
        return [_exact_float(R, "sweep value") for R in self.sweep]

    def tile_counts(self, dimension: int) -> tuple[int, ...]:
        """Reflection counts per axis; one count applies to every axis.

        Raises:
            ConfigurationError: For counts below 1 or of the wrong length.
        """
        counts: Sequence[int] = self.counts if self.counts is not None else [2]
        if len(counts) == 1:
            counts = list(counts) * dimension
        if len(counts) != dimension:
            raise ConfigurationError(f"Need 1 or {dimension} counts, got {len(counts)}")
        if not all(isinstance(c, int) and not isinstance(c, bool) and c >= 1 for c in counts):
            raise ConfigurationError(f"Counts must be positive integers, got {list(counts)}")
        return tuple(counts)

    def to_dict(self) -> dict[str, Any]:
        """Convert the configuration to a JSON-ready dictionary."""
        data = asdict(self)
        data["out"] = str(self.out)
        data["R"] = self.R if isinstance(self.R, str) else float(self.R)
        return data


def load_config(path: Path) -> dict[str, Any]:
    """Read flat key-value settings from a TOML file.

    Raises:
        ConfigurationError: For unreadable files, TOML errors, tables or unknown keys.
    """
    try:
        with open(path, "rb") as f:
            data = tomllib.load(f)
    except OSError as e:
        raise ConfigurationError(f"Cannot read config file '{path}': {e}") from e
    except tomllib.TOMLDecodeError as e:
        raise ConfigurationError(f"Invalid TOML in '{path}': {e}") from e
    nested = [key for key, value in data.items() if isinstance(value, dict)]
    if nested:
        raise ConfigurationError(f"Config keys must be flat, found tables: {', '.join(nested)}")
    unknown = sorted(set(data) - set(RunConfig.keys()))
    if unknown:
        raise ConfigurationError(f"Unknown configuration keys: {', '.join(unknown)}")
    logger.debug(f"Loaded {len(data)} settings from {path}")
    return data
