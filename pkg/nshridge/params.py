"""Swift–Hohenberg equation parameters."""

from dataclasses import dataclass
import math
from typing import Any

from .exceptions import ConfigurationError


@dataclass(frozen=True)
class Params:
    """Coefficients of (Δ+1)²u − αu − βu² + u³ = 0.

    Attributes:
        alpha: Linear coefficient, strictly negative.
        beta: Quadratic coefficient, strictly positive.
    """

    alpha: float
    """Linear coefficient α < 0."""

    beta: float
    """Quadratic coefficient β > 0."""

    def __post_init__(self) -> None:
        """Validate the sign conventions."""
        if not isinstance(self.alpha, (int, float)) or not isinstance(self.beta, (int, float)):
            raise TypeError("alpha and beta must be real numbers")
        if not math.isfinite(self.alpha) or self.alpha >= 0:
            raise ConfigurationError(f"alpha must be negative, got {self.alpha}")
        if not math.isfinite(self.beta) or self.beta <= 0:
            raise ConfigurationError(f"beta must be positive, got {self.beta}")
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "beta", float(self.beta))

    @property
    def beta_min_constants(self) -> float:
        """2√(1−α), the onset of nonzero constant solutions."""
        return 2.0 * math.sqrt(1.0 - self.alpha)

    def to_dict(self) -> dict[str, Any]:
        """Convert the parameters to a JSON-ready dictionary."""
        return {"alpha": self.alpha, "beta": self.beta}
