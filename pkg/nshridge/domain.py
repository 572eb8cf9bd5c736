"""Domain specifications: Neumann boxes and skew-periodic tori."""

from collections.abc import Sequence
from dataclasses import dataclass, replace
from enum import Enum
import logging
import math
from typing import Any

import numpy as np

from .exceptions import ConfigurationError

# Get logger
logger = logging.getLogger(__name__)

SUPPORTED_DIMENSIONS = (1, 2, 3)


class DomainKind(str, Enum):
    """Kinds of domains supported by the spectral bases."""

    # idiomatic way to prevent a __dict__ on immutable subclasses
    __slots__ = ()

    BOX = "box"
    """Rectangular box with sliding-wall (half-Neumann) boundary conditions"""

    TORUS = "torus"
    """Skew-periodic torus spanned by lattice generators"""

    def __format__(self, format_spec: str) -> str:
        """Format the enum value for display.

        Args:
            format_spec: Format specification string

        Returns:
            The enum value as a string.
        """
        return format(self.value, format_spec)


@dataclass(frozen=True)
class DomainSpec:
    """Geometry of a computational domain.

    Box domains are described by side lengths, tori by a generator matrix whose
    columns are the lattice vectors. The stretch factor R scales every length.
    """

    kind: DomainKind
    """Kind of domain."""

    lengths: tuple[float, ...] | None = None
    """Box side lengths at stretch 1."""

    generators: tuple[tuple[float, ...], ...] | None = None
    """Rows of the n×n generator matrix at stretch 1; columns are lattice vectors."""

    stretch: float = 1.0
    """Stretch factor R applied to every length."""

    def __post_init__(self) -> None:
        """Validate the geometry."""
        object.__setattr__(self, "kind", DomainKind(self.kind))
        if not math.isfinite(self.stretch) or self.stretch <= 0:
            raise ConfigurationError(f"Stretch R must be positive and finite, got {self.stretch}")

        if self.kind is DomainKind.BOX:
            if self.lengths is None or self.generators is not None:
                raise ConfigurationError("A box domain needs side lengths and no generators")
            lengths = tuple(float(length) for length in self.lengths)
            if len(lengths) not in SUPPORTED_DIMENSIONS:
                raise ConfigurationError(f"Unsupported dimension {len(lengths)}, expected 1 to 3")
            if not all(math.isfinite(length) and length > 0 for length in lengths):
                raise ConfigurationError(f"Box side lengths must be positive, got {lengths}")
            object.__setattr__(self, "lengths", lengths)
        else:
            if self.generators is None or self.lengths is not None:
                raise ConfigurationError("A torus domain needs generators and no side lengths")
            rows = tuple(tuple(float(entry) for entry in row) for row in self.generators)
            n = len(rows)
            if n not in SUPPORTED_DIMENSIONS:
                raise ConfigurationError(f"Unsupported dimension {n}, expected 1 to 3")
            if any(len(row) != n for row in rows):
                raise ConfigurationError("Generator matrix must be square")
            matrix = np.array(rows)
            if not np.all(np.isfinite(matrix)):
                raise ConfigurationError("Generator matrix entries must be finite")
            scale = float(np.prod(np.linalg.norm(matrix, axis=0)))
            if scale == 0.0 or abs(np.linalg.det(matrix)) <= 1e-12 * scale:
                raise ConfigurationError("Generator matrix is singular")
            object.__setattr__(self, "generators", rows)

    @property
    def dimension(self) -> int:
        """Spatial dimension n."""
        if self.lengths is not None:
            return len(self.lengths)
        return len(self.generators)  # type: ignore[arg-type]

    @property
    def matrix(self) -> np.ndarray:
        """Generator matrix at stretch 1; diagonal of side lengths for a box."""
        if self.lengths is not None:
            return np.diag(self.lengths)
        return np.array(self.generators, dtype=float)

    @property
    def scaled_matrix(self) -> np.ndarray:
        """Generator matrix of the stretched domain."""
        return self.stretch * self.matrix

    @property
    def scaled_lengths(self) -> tuple[float, ...]:
        """Side lengths of the stretched box.

        Raises:
            ConfigurationError: If the domain is not a box.
        """
        if self.lengths is None:
            raise ConfigurationError("Side lengths are only defined for box domains")
        return tuple(self.stretch * length for length in self.lengths)

    @property
    def volume(self) -> float:
        """Volume of the stretched domain, Rⁿ times the volume at stretch 1."""
        return float(self.stretch**self.dimension * abs(np.linalg.det(self.matrix)))

    def with_stretch(self, stretch: float) -> "DomainSpec":
        """Return the same domain with another stretch factor."""
        return replace(self, stretch=stretch)

    def to_dict(self) -> dict[str, Any]:
        """Convert the domain to a JSON-ready dictionary."""
        return {
            "kind": self.kind.value,
            "dimension": self.dimension,
            "lengths": list(self.lengths) if self.lengths is not None else None,
            "generators": [list(row) for row in self.generators] if self.generators else None,
            "R": self.stretch,
            "volume": self.volume,
        }


def make_domain(
    kind: DomainKind | str,
    dims: Sequence[float] | Sequence[Sequence[float]],
    R: float = 1.0,
) -> DomainSpec:
    """Build a validated domain specification.

    Args:
        kind: Domain kind, `box` or `torus`.
        dims: Side lengths for a box, or rows of the generator matrix for a torus.
        R: Stretch factor.

    Returns:
        The validated domain.

    Raises:
        ConfigurationError: For nonpositive lengths, singular generators or unsupported dimensions.

    Examples:
        >>> round(make_domain("box", [math.pi, math.pi], R=3).volume / math.pi**2, 12)
        9.0
    """
    try:
        kind = DomainKind(kind)
    except ValueError as e:
        raise ConfigurationError(f"Unknown domain kind '{kind}'") from e

    if kind is DomainKind.BOX:
        domain = DomainSpec(kind, lengths=tuple(dims), stretch=R)  # type: ignore[arg-type]
    else:
        domain = DomainSpec(
            kind,
            generators=tuple(tuple(row) for row in dims),  # type: ignore[union-attr]
            stretch=R,
        )
    logger.debug(f"Created {kind} domain n={domain.dimension} volume={domain.volume}")
    return domain
