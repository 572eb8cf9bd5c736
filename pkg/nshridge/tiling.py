"""Entire solutions from box solutions by even reflection.

A sliding-wall solution on a box extends evenly across every face. Since each
cosine mode is already even about the faces, the extension is bookkeeping on
coefficients: mode k on the box of side ℓ is mode c·k on the box of side c·ℓ,
and the doubled box is one period of a rectangular torus.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property
import logging
import math
from typing import Any

import numpy as np

from .bases.cosine_box import CosineBoxBasis
from .core import make_basis
from .domain import DomainKind, make_domain
from .exceptions import ConfigurationError
from .field import SpectralField
from .functionals import energy_E
from .params import Params
from .spectral import strong_residual
from .utils.formatters import TwoColumnFormatMixin

# Get logger
logger = logging.getLogger(__name__)


def _box_basis(U: SpectralField) -> CosineBoxBasis:
    if U.domain.kind is not DomainKind.BOX or not isinstance(U.basis, CosineBoxBasis):
        raise ConfigurationError("Reflection applies to fields on sliding-wall boxes only")
    return U.basis


@dataclass(frozen=True, eq=False)
class ReflectionTiling:
    """Even extension of a box field onto a box of `counts` copies per axis."""

    base: SpectralField
    """Field on the fundamental box."""

    counts: tuple[int, ...]
    """Copies per axis."""

    @cached_property
    def cell(self) -> SpectralField:
        """Assembled field on the tiled box."""
        basis = _box_basis(self.base)
        n = basis.dimension
        lengths = [c * length for c, length in zip(self.counts, basis.lengths, strict=True)]
        modes = basis.modes * max(self.counts)
        target = make_basis(make_domain(DomainKind.BOX, lengths), modes)
        coeffs = target.zeros()
        # √c per axis compensates the normalization of the longer box
        index = tuple(slice(0, (basis.modes + 1) * c, c) for c in self.counts)
        coeffs[index] = self.base.coeffs * math.sqrt(math.prod(self.counts))
        logger.debug(f"Reflected n={n} field into counts={self.counts}, N={modes}")
        return SpectralField(target, coeffs)

    @cached_property
    def periodic(self) -> SpectralField:
        """Even extension on the doubled box as a field on the rectangular torus."""
        basis = _box_basis(self.base)
        n = basis.dimension
        generators = np.diag([2.0 * length for length in basis.lengths])
        torus = make_basis(make_domain(DomainKind.TORUS, generators.tolist()), basis.modes)
        signed = np.arange(-basis.modes, basis.modes + 1)
        magnitude = np.abs(signed)
        coeffs = np.array(self.base.coeffs)[np.ix_(*([magnitude] * n))].astype(complex)
        for axis, length in enumerate(basis.lengths):
            # cos(πkx/ℓ) splits into two exponentials of the 2ℓ period
            weights = basis.axis_norms(length)[magnitude] * np.where(signed == 0, 1.0, 0.5)
            shape = [1] * n
            shape[axis] = -1
            coeffs = coeffs * weights.reshape(shape)
        return SpectralField(torus, coeffs * math.sqrt(torus.domain.volume))

    @property
    def copies(self) -> int:
        """Number of box copies in the cell."""
        return math.prod(self.counts)

    def restrict(self) -> np.ndarray:
        """Cell values on the base collocation grid."""
        basis = _box_basis(self.base)
        cell_basis: CosineBoxBasis = self.cell.basis  # type: ignore[assignment]
        axes = [basis.axis_grid(axis) for axis in range(basis.dimension)]
        return cell_basis.evaluate_on_axes(self.cell.coeffs, axes)


def reflect_extend(U: SpectralField, counts: Sequence[int] | int) -> ReflectionTiling:
    """Extend a box field evenly onto `counts` copies per axis.

    Args:
        U: Field on a sliding-wall box.
        counts: Copies per axis, or one count for every axis.

    Returns:
        The tiling.

    Raises:
        ConfigurationError: For torus fields or counts below 1.
    """
    basis = _box_basis(U)
    if isinstance(counts, int):
        counts = (counts,) * basis.dimension
    counts = tuple(counts)
    if len(counts) != basis.dimension:
        raise ConfigurationError(f"Need {basis.dimension} counts, got {len(counts)}")
    if not all(isinstance(c, (int, np.integer)) and c >= 1 for c in counts):
        raise ConfigurationError(f"Counts must be positive integers, got {counts}")
    return ReflectionTiling(base=U, counts=tuple(int(c) for c in counts))


def residual_entire(u: SpectralField, p: Params) -> float:
    """Relative strong residual of a torus field.

    Raises:
        ConfigurationError: If u is not a torus field.
    """
    if u.domain.kind is not DomainKind.TORUS:
        raise ConfigurationError("Entire-solution residuals are evaluated on tori")
    return strong_residual(u, p)


@dataclass
class TilingReport(TwoColumnFormatMixin):
    """Symmetry, restriction, energy and residual checks of a reflection tiling."""

    counts: list[int]
    interface_jump: float
    """Largest difference between the cell on an interface and U on the matching face,
    relative to max |U|."""

    interface_slope: float
    """Largest normal derivative of the cell on an interface, relative to max |U| per unit
    length."""

    symmetry_error: float
    """Largest deviation from reflection symmetry about the interfaces, relative."""

    restriction_error: float
    """Largest deviation of the cell from U on the base grid, relative."""

    energy_ratio_error: float
    """|E[cell]/(copies·E[U]) − 1|."""

    base_residual: float | None = None
    """Strong residual on the base box."""

    torus_residual: float | None = None
    """Strong residual of the periodic cell."""

    _format_prefix: str = field(default="tiling_", init=False)

    @property
    def passed(self) -> bool:
        """Geometric checks within 1e−10 and torus residual within twice the base residual."""
        geometric = max(
            self.interface_jump,
            self.interface_slope,
            self.symmetry_error,
            self.restriction_error,
            self.energy_ratio_error,
        )
        if geometric > 1e-10:
            return False
        if self.torus_residual is None or self.base_residual is None:
            return True
        return self.torus_residual <= 2 * self.base_residual + 1e-14

    def to_dict(self) -> dict[str, Any]:
        """Convert the report to a JSON-ready dictionary."""
        return {
            "counts": self.counts,
            "interface_jump": self.interface_jump,
            "interface_slope": self.interface_slope,
            "symmetry_error": self.symmetry_error,
            "restriction_error": self.restriction_error,
            "energy_ratio_error": self.energy_ratio_error,
            "base_residual": self.base_residual,
            "torus_residual": self.torus_residual,
            "passed": self.passed,
        }


def tiling_report(tiling: ReflectionTiling, p: Params | None = None) -> TilingReport:
    """Check a tiling; residuals need the parameters.

    Args:
        tiling: Reflection tiling.
        p: Parameters for the energy ratio and residuals; without them the
            energy ratio compares ∫u² instead.

    Returns:
        The tiling report.
    """
    basis = _box_basis(tiling.base)
    cell = tiling.cell
    cell_basis: CosineBoxBasis = cell.basis  # type: ignore[assignment]
    scale = max(float(np.max(np.abs(tiling.base.values))), np.finfo(float).tiny)
    spacing = [length / basis.grid for length in basis.lengths]

    jump = 0.0
    slope = 0.0
    symmetry = 0.0
    base_axes = [basis.axis_grid(i) for i in range(basis.dimension)]
    for axis, count in enumerate(tiling.counts):
        axes = [cell_basis.axis_grid(i) for i in range(basis.dimension)]
        orders = [0] * basis.dimension
        orders[axis] = 1
        for j in range(1, count):
            interface = j * basis.lengths[axis]
            # copies alternate orientation, so interface j meets the far face when j is odd
            face = basis.lengths[axis] if j % 2 else 0.0
            on_interface = list(base_axes)
            on_interface[axis] = np.array([interface])
            on_face = list(base_axes)
            on_face[axis] = np.array([face])
            value = cell_basis.evaluate_on_axes(cell.coeffs, on_interface)
            expected = basis.evaluate_on_axes(tiling.base.coeffs, on_face)
            jump = max(jump, float(np.max(np.abs(value - expected))) / scale)
            derivative = cell_basis.evaluate_on_axes(cell.coeffs, on_interface, orders)
            slope = max(slope, float(np.max(np.abs(derivative))) * basis.lengths[axis] / scale)

            offsets = (np.arange(basis.grid) + 0.5) * spacing[axis]
            left, right = list(axes), list(axes)
            left[axis] = interface - offsets
            right[axis] = interface + offsets
            lhs = cell_basis.evaluate_on_axes(cell.coeffs, left)
            rhs = cell_basis.evaluate_on_axes(cell.coeffs, right)
            symmetry = max(symmetry, float(np.max(np.abs(lhs - rhs))) / scale)

    restriction = float(np.max(np.abs(tiling.restrict() - tiling.base.values))) / scale

    if p is not None:
        base_energy = energy_E(tiling.base, p)
        cell_energy = energy_E(cell, p)
    else:
        base_energy = tiling.base.norm_squared()
        cell_energy = cell.norm_squared()
    if base_energy != 0:
        ratio_error = abs(cell_energy / (tiling.copies * base_energy) - 1.0)
    else:
        ratio_error = abs(cell_energy)

    return TilingReport(
        counts=list(tiling.counts),
        interface_jump=jump,
        interface_slope=slope,
        symmetry_error=symmetry,
        restriction_error=restriction,
        energy_ratio_error=ratio_error,
        base_residual=strong_residual(tiling.base, p) if p is not None else None,
        torus_residual=residual_entire(tiling.periodic, p) if p is not None else None,
    )
