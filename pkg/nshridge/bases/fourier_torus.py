"""Fourier basis on skew-periodic tori."""

from collections.abc import Sequence
import itertools
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


class FourierTorusBasis(BaseBasis):
    """Fourier eigenbasis on a torus spanned by lattice generators.

    Complex exponentials exp(iK·x)/√|Ω| with K = 2πA⁻ᵀk, |k_i| ≤ N, stored
    centered and with Hermitian symmetry; uniform grid of M ≥ 4N+1 points per
    generator direction.
    """

    kind = DomainKind.TORUS
    dtype = complex

    def _minimum_grid(self, modes: int) -> int:
        return 4 * modes + 1

    @property
    def coeff_shape(self) -> tuple[int, ...]:
        """Shape (2N+1)ⁿ of the centered coefficient array."""
        return (2 * self.modes + 1,) * self.dimension

    @property
    def zero_mode(self) -> tuple[int, ...]:
        """Index of the constant mode."""
        return (self.modes,) * self.dimension

    @property
    def _gather(self) -> tuple[np.ndarray, ...]:
        """Open mesh picking the represented modes out of an FFT array."""
        index = np.arange(-self.modes, self.modes + 1) % self.grid
        return np.ix_(*([index] * self.dimension))

    def mode_indices(self) -> np.ndarray:
        """Integer lattice index along each generator."""
        return np.indices(self.coeff_shape) - self.modes

    def wavevectors(self) -> np.ndarray:
        """Physical wavevectors K = 2πA⁻ᵀk, shape (n, *coeff_shape)."""
        dual = 2 * math.pi * np.linalg.inv(self.domain.scaled_matrix).T
        return np.tensordot(dual, self.mode_indices(), axes=1)

    def _eigen_table(self) -> EigenTable:
        mu = np.sum(self.wavevectors() ** 2, axis=0)
        norms = np.full(self.coeff_shape, 1.0 / math.sqrt(self.domain.volume))
        return EigenTable(mu=mu, norms=norms)

    def forward(self, values: np.ndarray) -> np.ndarray:
        """Project grid values onto the exponentials with an FFT."""
        self.check_values(values)
        spectrum = sp_fft.fftn(np.asarray(values, dtype=float))
        scale = math.sqrt(self.domain.volume) / self.grid**self.dimension
        return spectrum[self._gather] * scale

    def derivative_values(self, coeffs: np.ndarray, orders: Sequence[int]) -> np.ndarray:
        """Synthesize a mixed derivative along the physical axes with an inverse FFT."""
        self.check_coeffs(coeffs)
        if len(orders) != self.dimension or any(o not in (0, 1, 2) for o in orders):
            raise ConfigurationError(f"Derivative orders must be 0, 1 or 2 per axis, got {orders}")

        arr = np.asarray(coeffs, dtype=complex)
        if any(orders):
            for component, order in zip(self.wavevectors(), orders, strict=True):
                arr = arr * (1j * component) ** order
        spectrum = np.zeros(self.grid_shape, dtype=complex)
        spectrum[self._gather] = arr
        scale = self.grid**self.dimension / math.sqrt(self.domain.volume)
        return sp_fft.ifftn(spectrum).real * scale

    def grid_coordinates(self) -> np.ndarray:
        """Physical coordinates x = A y of the uniform grid y ∈ [0, 1)ⁿ."""
        return np.tensordot(self.domain.scaled_matrix, self._unit_coordinates(), axes=1)

    def _unit_coordinates(self) -> np.ndarray:
        return np.indices(self.grid_shape) / self.grid

    def wave_mode(self, index: Sequence[int]) -> np.ndarray:
        """Coefficients of cos(K·x) for the lattice index k."""
        index = tuple(index)
        if len(index) != self.dimension or not all(abs(k) <= self.modes for k in index):
            raise ConfigurationError(f"Mode {index} is not represented")
        coeffs = self.zeros()
        plus = tuple(k + self.modes for k in index)
        minus = tuple(self.modes - k for k in index)
        coeffs[plus] += math.sqrt(self.domain.volume) / 2
        coeffs[minus] += math.sqrt(self.domain.volume) / 2
        return coeffs

    def symmetrize(self, coeffs: np.ndarray) -> np.ndarray:
        """Enforce c(−k) = conj(c(k))."""
        coeffs = np.asarray(coeffs, dtype=complex)
        mirrored = coeffs[(slice(None, None, -1),) * self.dimension]
        return (coeffs + np.conj(mirrored)) / 2

    def hermitian_defect(self, coeffs: np.ndarray) -> float:
        """Largest violation of the conjugate symmetry."""
        mirrored = coeffs[(slice(None, None, -1),) * self.dimension]
        return float(np.max(np.abs(coeffs - np.conj(mirrored)), initial=0.0))

    def _short_vectors(self) -> np.ndarray:
        """Lattice vectors with coefficients in {−1, 0, 1}, origin excluded."""
        offsets = [
            o for o in itertools.product((-1, 0, 1), repeat=self.dimension) if any(o)
        ]
        return self.domain.scaled_matrix @ np.array(offsets, dtype=float).T

    def distance_to_center(self) -> np.ndarray:
        """Minimal-image distance to the origin."""
        unit = self._unit_coordinates()
        unit = unit - np.round(unit)
        matrix = self.domain.scaled_matrix
        best = np.sqrt(np.sum(np.tensordot(matrix, unit, axes=1) ** 2, axis=0))
        for offset in itertools.product((-1, 0, 1), repeat=self.dimension):
            if not any(offset):
                continue
            shift = np.array(offset, dtype=float).reshape((-1,) + (1,) * self.dimension)
            image = np.tensordot(matrix, unit + shift, axes=1)
            best = np.minimum(best, np.sqrt(np.sum(image**2, axis=0)))
        return best

    def max_plateau_extent(self) -> float:
        """Half the shortest lattice vector."""
        return float(np.min(np.linalg.norm(self._short_vectors(), axis=0))) / 2


register_basis("torus", FourierTorusBasis)
