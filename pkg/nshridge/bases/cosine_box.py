"""Neumann cosine basis on boxes."""

from collections.abc import Sequence
import logging
import math

import numpy as np
from scipy import fft as sp_fft

from ..core import register_basis
from ..domain import DomainKind
from ..exceptions import ConfigurationError
from .base import BaseBasis, EigenTable

# Get logger
logger = logging.getLogger(__name__)


def _scale_axis(arr: np.ndarray, axis: int, weights: np.ndarray) -> np.ndarray:
    """Multiply `arr` by `weights` broadcast along one axis."""
    shape = [1] * arr.ndim
    shape[axis] = -1
    return arr * weights.reshape(shape)


def _pad_axis(arr: np.ndarray, axis: int, size: int, offset: int = 0) -> np.ndarray:
    """Zero-pad `arr` along one axis to `size`, placing it at `offset`."""
    shape = list(arr.shape)
    shape[axis] = size
    out = np.zeros(shape, dtype=arr.dtype)
    index = [slice(None)] * arr.ndim
    index[axis] = slice(offset, offset + arr.shape[axis])
    out[tuple(index)] = arr
    return out


class CosineBoxBasis(BaseBasis):
    """Neumann cosine eigenbasis on a box with sliding-wall boundary conditions.

    L₂-orthonormal products of cos(πk x/ℓ) with k = 0..N per axis, collocated on
    the midpoint grid of M ≥ 2N+1 points per axis and transformed with DCT/DST.
    """

    kind = DomainKind.BOX
    dtype = float

    def _minimum_grid(self, modes: int) -> int:
        return 2 * modes + 1

    @property
    def lengths(self) -> tuple[float, ...]:
        """Stretched side lengths."""
        return self.domain.scaled_lengths

    @property
    def coeff_shape(self) -> tuple[int, ...]:
        """Shape (N+1)ⁿ of the coefficient array."""
        return (self.modes + 1,) * self.dimension

    @property
    def zero_mode(self) -> tuple[int, ...]:
        """Index of the constant mode."""
        return (0,) * self.dimension

    def axis_norms(self, length: float) -> np.ndarray:
        """Normalization factors √(1/ℓ), √(2/ℓ), ... along one axis."""
        norms = np.full(self.modes + 1, math.sqrt(2.0 / length))
        norms[0] = math.sqrt(1.0 / length)
        return norms

    def _axis_wavenumbers(self, length: float) -> np.ndarray:
        return math.pi * np.arange(self.modes + 1) / length

    def _eigen_table(self) -> EigenTable:
        mu = np.zeros(self.coeff_shape)
        norms = np.ones(self.coeff_shape)
        for axis, length in enumerate(self.lengths):
            k_squared = self._axis_wavenumbers(length) ** 2
            mu = mu + _scale_axis(np.ones(self.coeff_shape), axis, k_squared)
            norms = _scale_axis(norms, axis, self.axis_norms(length))
        return EigenTable(mu=mu, norms=norms)

    def forward(self, values: np.ndarray) -> np.ndarray:
        """Project grid values onto the cosine modes with a type-II DCT."""
        self.check_values(values)
        spectrum = sp_fft.dctn(np.asarray(values, dtype=float), type=2)
        coeffs = spectrum[(slice(0, self.modes + 1),) * self.dimension]
        for axis, length in enumerate(self.lengths):
            coeffs = _scale_axis(coeffs, axis, length / self.grid * self.axis_norms(length) / 2)
        return coeffs

    def derivative_values(self, coeffs: np.ndarray, orders: Sequence[int]) -> np.ndarray:
        """Synthesize a mixed derivative with type-III DCT (even orders) or DST (odd orders)."""
        self.check_coeffs(coeffs)
        if len(orders) != self.dimension or any(o not in (0, 1, 2) for o in orders):
            raise ConfigurationError(f"Derivative orders must be 0, 1 or 2 per axis, got {orders}")

        arr = np.asarray(coeffs, dtype=float)
        for axis, (length, order) in enumerate(zip(self.lengths, orders, strict=True)):
            # d/dx cos(kx) = -k sin(kx), d²/dx² cos(kx) = -k² cos(kx)
            weights = self.axis_norms(length) * self._axis_wavenumbers(length) ** order
            if order:
                weights = -weights
            arr = _scale_axis(arr, axis, weights)
            if order == 1:
                # sin modes 1..N sit at DST-III positions 0..N-1
                head = [slice(None)] * arr.ndim
                head[axis] = slice(1, None)
                arr = _pad_axis(arr[tuple(head)] / 2, axis, self.grid)
                arr = sp_fft.dst(arr, type=3, axis=axis)
            else:
                half = np.full(self.modes + 1, 0.5)
                half[0] = 1.0
                arr = _pad_axis(_scale_axis(arr, axis, half), axis, self.grid)
                arr = sp_fft.dct(arr, type=3, axis=axis)
        return arr

    def evaluate_on_axes(
        self,
        coeffs: np.ndarray,
        axes_points: Sequence[np.ndarray],
        orders: Sequence[int] | None = None,
    ) -> np.ndarray:
        """Evaluate a field, or a mixed derivative, on an arbitrary tensor grid.

        Args:
            coeffs: Coefficient array.
            axes_points: Physical coordinates along each axis.
            orders: Derivative order per axis, defaults to no derivative.

        Returns:
            Values with shape (len(axes_points[0]), ..., len(axes_points[n-1])).
        """
        self.check_coeffs(coeffs)
        orders = orders if orders is not None else (0,) * self.dimension
        arr = np.asarray(coeffs, dtype=float)
        for axis, (length, points, order) in enumerate(
            zip(self.lengths, axes_points, orders, strict=True)
        ):
            k = self._axis_wavenumbers(length)
            phase = np.outer(k, np.asarray(points, dtype=float))
            if order == 0:
                table = np.cos(phase)
            elif order == 1:
                table = -k[:, None] * np.sin(phase)
            elif order == 2:
                table = -(k[:, None] ** 2) * np.cos(phase)
            else:
                raise ConfigurationError(f"Unsupported derivative order {order}")
            table = self.axis_norms(length)[:, None] * table
            arr = np.moveaxis(np.tensordot(arr, table, axes=([axis], [0])), -1, axis)
        return arr

    def axis_grid(self, axis: int) -> np.ndarray:
        """Midpoint collocation coordinates along one axis."""
        return (np.arange(self.grid) + 0.5) * self.lengths[axis] / self.grid

    def grid_coordinates(self) -> np.ndarray:
        """Physical coordinates of the midpoint grid."""
        axes = [self.axis_grid(axis) for axis in range(self.dimension)]
        return np.stack(np.meshgrid(*axes, indexing="ij"))

    def mode_indices(self) -> np.ndarray:
        """Cosine mode index along each axis."""
        return np.indices(self.coeff_shape)

    def wave_mode(self, index: Sequence[int]) -> np.ndarray:
        """Coefficients of Π cos(πk_i x_i/ℓ_i)."""
        index = tuple(index)
        if len(index) != self.dimension or not all(0 <= k <= self.modes for k in index):
            raise ConfigurationError(f"Mode {index} is not represented")
        coeffs = self.zeros()
        coeffs[index] = 1.0 / self.eigen.norms[index]
        return coeffs

    def symmetrize(self, coeffs: np.ndarray) -> np.ndarray:
        """Cosine coefficients are real already."""
        return np.array(np.real(coeffs), dtype=float)

    def distance_to_center(self) -> np.ndarray:
        """Distance to the origin corner; even reflection completes the radial bump."""
        return np.sqrt(np.sum(self.grid_coordinates() ** 2, axis=0))

    def max_plateau_extent(self) -> float:
        """Shortest stretched side."""
        return min(self.lengths)


register_basis("box", CosineBoxBasis)
