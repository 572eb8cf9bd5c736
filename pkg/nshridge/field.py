"""Immutable fields stored as spectral coefficients."""

from dataclasses import dataclass
from functools import cached_property
import logging

import numpy as np

from .bases.base import BaseBasis
from .domain import DomainSpec
from .exceptions import ConfigurationError

# Get logger
logger = logging.getLogger(__name__)

# Tolerance on the conjugate symmetry of torus coefficients, relative to the largest entry
_HERMITIAN_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class SpectralField:
    """A real field on a domain, stored as coefficients in the basis eigenfunctions.

    The coefficient array is copied and made read-only on construction, so a
    field can be shared between threads.
    """

    basis: BaseBasis
    """Basis the coefficients refer to."""

    coeffs: np.ndarray
    """Coefficient per represented mode."""

    def __post_init__(self) -> None:
        """Copy, validate and freeze the coefficients."""
        coeffs = np.array(self.coeffs, dtype=self.basis.dtype)
        self.basis.check_coeffs(coeffs)
        defect = getattr(self.basis, "hermitian_defect", None)
        if defect is not None:
            scale = float(np.max(np.abs(coeffs), initial=0.0))
            if defect(coeffs) > _HERMITIAN_TOLERANCE * max(scale, 1.0):
                raise ConfigurationError(
                    "Torus coefficients lack the conjugate symmetry of a real field"
                )
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_values(cls, basis: BaseBasis, values: np.ndarray) -> "SpectralField":
        """Project grid values onto the basis."""
        return cls(basis, basis.forward(np.asarray(values, dtype=float)))

    @classmethod
    def constant(cls, basis: BaseBasis, value: float) -> "SpectralField":
        """Constant field."""
        return cls(basis, basis.constant(value))

    @classmethod
    def zeros(cls, basis: BaseBasis) -> "SpectralField":
        """Zero field."""
        return cls(basis, basis.zeros())

    @property
    def domain(self) -> DomainSpec:
        """Domain of the field."""
        return self.basis.domain

    @property
    def modes(self) -> int:
        """Truncation N."""
        return self.basis.modes

    @cached_property
    def values(self) -> np.ndarray:
        """Values on the collocation grid (read-only)."""
        values = self.basis.inverse(self.coeffs)
        values.setflags(write=False)
        return values

    def norm_squared(self) -> float:
        """Σ|c_k|², equal to ∫u² by Parseval."""
        return self.basis.inner(self.coeffs, self.coeffs)

    def is_zero(self) -> bool:
        """True when every coefficient vanishes."""
        return not np.any(self.coeffs)

    def compatible(self, other: "SpectralField") -> bool:
        """True when both fields share the same basis."""
        return self.basis is other.basis

    def _check_compatible(self, other: "SpectralField") -> None:
        if not self.compatible(other):
            raise ConfigurationError("Fields live on different bases")

    def __add__(self, other: "SpectralField") -> "SpectralField":
        """Sum of two fields on the same basis."""
        self._check_compatible(other)
        return SpectralField(self.basis, self.coeffs + other.coeffs)

    def __sub__(self, other: "SpectralField") -> "SpectralField":
        """Difference of two fields on the same basis."""
        self._check_compatible(other)
        return SpectralField(self.basis, self.coeffs - other.coeffs)

    def __mul__(self, scale: float) -> "SpectralField":
        """Field scaled by a real number."""
        return SpectralField(self.basis, self.coeffs * float(scale))

    __rmul__ = __mul__

    def __neg__(self) -> "SpectralField":
        """Field with flipped sign."""
        return SpectralField(self.basis, -self.coeffs)
