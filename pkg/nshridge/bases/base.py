"""Base class for the spectral bases."""

from abc import ABC, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass
import logging
import math
from typing import ClassVar, final

import numpy as np
from scipy import fft as sp_fft

from ..domain import DomainKind, DomainSpec
from ..exceptions import ConfigurationError

# Get logger
logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EigenTable:
    """Eigenvalues of −Δ and normalization factors for every represented mode."""

    mu: np.ndarray
    """Eigenvalue μ per coefficient, same shape as the coefficient array."""

    norms: np.ndarray
    """L₂ normalization factor of each mode's basis function."""

    def symbol(self, alpha: float) -> np.ndarray:
        """Diagonal of the quadratic form Q, ((μ−1)² − α) per mode."""
        return (self.mu - 1.0) ** 2 - alpha


class BaseBasis(ABC):
    """Base class for L₂-orthonormal eigenbases of −Δ on a domain.

    A basis owns the truncation (modes N), the collocation grid (M points per
    axis) and the transforms between coefficients and grid values. Grid
    quadrature is exact for products of four band-limited fields.
    """

    kind: ClassVar[DomainKind]
    dtype: ClassVar[type]

    def __init__(self, domain: DomainSpec, modes: int, grid: int | None = None) -> None:
        """Initialize the basis.

        Args:
            domain: Domain of the right kind for this basis.
            modes: Truncation N, the largest mode index per axis.
            grid: Collocation points M per axis; defaults to a fast FFT size above the minimum.

        Raises:
            ConfigurationError: For a domain of the wrong kind or a grid too small for the modes.
        """
        if domain.kind is not self.kind:
            raise ConfigurationError(
                f"{type(self).__name__} needs a {self.kind} domain, got {domain.kind}"
            )
        if not isinstance(modes, int) or modes < 1:
            raise ConfigurationError(f"Mode count must be a positive integer, got {modes}")

        minimum = self._minimum_grid(modes)
        if grid is None:
            grid = sp_fft.next_fast_len(minimum)
        if grid < minimum:
            raise ConfigurationError(
                f"Grid of {grid} points per axis cannot resolve {modes} modes, need >= {minimum}"
            )

        self.domain = domain
        self.modes = modes
        self.grid = int(grid)
        self.eigen = self._eigen_table()
        logger.debug(f"{type(self).__name__} n={domain.dimension} N={modes} M={self.grid}")

    @abstractmethod
    def _minimum_grid(self, modes: int) -> int:
        """Smallest grid size giving exact quartic quadrature."""
        pass  # pragma: no cover

    @abstractmethod
    def _eigen_table(self) -> EigenTable:
        """Compute the eigenvalue table."""
        pass  # pragma: no cover

    @property
    @abstractmethod
    def coeff_shape(self) -> tuple[int, ...]:
        """Shape of the coefficient array."""
        pass  # pragma: no cover

    @property
    @abstractmethod
    def zero_mode(self) -> tuple[int, ...]:
        """Array index of the constant mode."""
        pass  # pragma: no cover

    @abstractmethod
    def forward(self, values: np.ndarray) -> np.ndarray:
        """Project grid values onto the represented modes.

        Args:
            values: Real values on the collocation grid.

        Returns:
            Coefficient array.
        """
        pass  # pragma: no cover

    @abstractmethod
    def derivative_values(self, coeffs: np.ndarray, orders: Sequence[int]) -> np.ndarray:
        """Evaluate a mixed partial derivative on the collocation grid.

        Args:
            coeffs: Coefficient array.
            orders: Derivative order (0, 1 or 2) along each physical axis.

        Returns:
            Real grid values of the derivative.
        """
        pass  # pragma: no cover

    @abstractmethod
    def grid_coordinates(self) -> np.ndarray:
        """Physical coordinates of the grid points, shape (n, M, ..., M)."""
        pass  # pragma: no cover

    @abstractmethod
    def mode_indices(self) -> np.ndarray:
        """Integer mode index along each axis for every coefficient, shape (n, *coeff_shape)."""
        pass  # pragma: no cover

    @abstractmethod
    def wave_mode(self, index: Sequence[int]) -> np.ndarray:
        """Coefficients of the real unit-amplitude mode with the given integer index."""
        pass  # pragma: no cover

    @abstractmethod
    def symmetrize(self, coeffs: np.ndarray) -> np.ndarray:
        """Return coefficients projected onto real-valued fields."""
        pass  # pragma: no cover

    @abstractmethod
    def distance_to_center(self) -> np.ndarray:
        """Distance of each grid point to the plateau bump center."""
        pass  # pragma: no cover

    @abstractmethod
    def max_plateau_extent(self) -> float:
        """Largest support radius of a bump that fits the domain."""
        pass  # pragma: no cover

    @property
    def dimension(self) -> int:
        """Spatial dimension n."""
        return self.domain.dimension

    @property
    def grid_shape(self) -> tuple[int, ...]:
        """Shape of the collocation grid."""
        return (self.grid,) * self.dimension

    @property
    def cell_weight(self) -> float:
        """Quadrature weight of each grid point."""
        return self.domain.volume / self.grid**self.dimension

    @final
    def inverse(self, coeffs: np.ndarray) -> np.ndarray:
        """Evaluate coefficients on the collocation grid."""
        return self.derivative_values(coeffs, (0,) * self.dimension)

    @final
    def integral(self, values: np.ndarray) -> float:
        """Integrate grid values over the domain."""
        return self.cell_weight * float(np.sum(values))

    @final
    def inner(self, a: np.ndarray, b: np.ndarray) -> float:
        """L₂ inner product of two real fields given by their coefficients."""
        return float(np.vdot(a, b).real)

    @final
    def q_inner(self, a: np.ndarray, b: np.ndarray, alpha: float) -> float:
        """Inner product induced by the quadratic form Q."""
        return self.inner(a, self.eigen.symbol(alpha) * b)

    @final
    def zeros(self) -> np.ndarray:
        """Coefficients of the zero field."""
        return np.zeros(self.coeff_shape, dtype=self.dtype)

    @final
    def constant(self, value: float) -> np.ndarray:
        """Coefficients of the constant field with the given value."""
        coeffs = self.zeros()
        coeffs[self.zero_mode] = value * math.sqrt(self.domain.volume)
        return coeffs

    @final
    def random_coeffs(
        self, rng: np.random.Generator, weight: np.ndarray | None = None
    ) -> np.ndarray:
        """Draw a random band-limited real field.

        Args:
            rng: Random generator.
            weight: Optional per-mode amplitude multiplier.

        Returns:
            Coefficient array of a real field.
        """
        coeffs = rng.standard_normal(self.coeff_shape)
        if self.dtype is complex:
            coeffs = coeffs + 1j * rng.standard_normal(self.coeff_shape)
        if weight is not None:
            coeffs = coeffs * weight
        return self.symmetrize(coeffs)

    @final
    def check_coeffs(self, coeffs: np.ndarray) -> None:
        """Validate a coefficient array for this basis.

        Raises:
            ConfigurationError: On a shape mismatch or non-finite entries.
        """
        if coeffs.shape != self.coeff_shape:
            raise ConfigurationError(
                f"Coefficient shape {coeffs.shape} does not match basis shape {self.coeff_shape}"
            )
        if not np.all(np.isfinite(coeffs)):
            raise ConfigurationError("Coefficients must be finite")

    @final
    def check_values(self, values: np.ndarray) -> None:
        """Validate grid values for this basis.

        Raises:
            ConfigurationError: On a grid mismatch.
        """
        if values.shape != self.grid_shape:
            raise ConfigurationError(
                f"Grid values of shape {values.shape} do not match grid {self.grid_shape}"
            )
