"""Spectral operations on fields: transforms, integrals, Q form and test functions."""

import logging
import math

import numpy as np

from .bases.base import BaseBasis
from .exceptions import ConfigurationError
from .field import SpectralField
from .params import Params

# Get logger
logger = logging.getLogger(__name__)

# Transition width of the plateau bump relative to its support radius
BUMP_WIDTH_FRACTION = 0.2


def transform(basis: BaseBasis, values: np.ndarray) -> SpectralField:
    """Project values on the collocation grid onto the basis.

    Band-limited fields are reproduced exactly (to rounding) by `inverse`.
    """
    return SpectralField.from_values(basis, values)


def inverse(u: SpectralField) -> np.ndarray:
    """Values of a field on the collocation grid."""
    return np.array(u.values)


def integral_power(u: SpectralField, m: int) -> float:
    """Integral of uᵐ over the domain, exact for band-limited fields and m ≤ 4.

    Args:
        u: Field.
        m: Power, 2, 3 or 4.

    Returns:
        ∫uᵐ dx.
    """
    if m not in (2, 3, 4):
        raise ConfigurationError(f"Power must be 2, 3 or 4, got {m}")
    return u.basis.integral(u.values**m)


def quadratic_form_Q(u: SpectralField, p: Params) -> float:
    """Q[u] = Σ((μ−1)² − α)c², the squared energy-space norm."""
    return u.basis.q_inner(u.coeffs, u.coeffs, p.alpha)


def w22_norm_squared(u: SpectralField) -> float:
    """‖u‖² in W₂², Σ(μ² + μ + 1)c² by orthogonality of the eigenfunctions."""
    mu = u.basis.eigen.mu
    return u.basis.inner(u.coeffs, (mu**2 + mu + 1.0) * u.coeffs)


def norm_equivalence_constants(basis: BaseBasis, p: Params) -> tuple[float, float]:
    """Constants c, C with c‖u‖²_{W₂²} ≤ Q[u] ≤ C‖u‖²_{W₂²} on the represented modes.

    Args:
        basis: Truncated basis.
        p: Parameters; only α enters.

    Returns:
        Tuple (c, C) of the smallest and largest ratio ((μ−1)² − α)/(μ² + μ + 1).
    """
    mu = basis.eigen.mu
    ratio = ((mu - 1.0) ** 2 - p.alpha) / (mu**2 + mu + 1.0)
    return float(np.min(ratio)), float(np.max(ratio))


def smoothstep(tau: np.ndarray) -> np.ndarray:
    """Quintic smoothstep on [0, 1], C² at both ends."""
    tau = np.clip(tau, 0.0, 1.0)
    return tau**3 * (10.0 - 15.0 * tau + 6.0 * tau**2)


def build_plateau_bump(basis: BaseBasis, r: float, width: float | None = None) -> SpectralField:
    """Radial plateau function: 1 for |x| ≤ r−½−width, 0 for |x| ≥ r−½.

    The default transition width is a fixed fraction of the support radius, so
    the profile is a rescaled copy of one smooth shape and its Q converges
    under refinement. `width=0.5` gives the unit-scale transition on
    [r−1, r−½]. On a box the bump is centred at the origin corner, so its even
    reflections form a full radial bump; on a torus it is centred at the origin
    using minimal-image distances. The sampled profile is band-limited by
    projection.

    Args:
        basis: Basis of the target domain.
        r: Bump radius parameter; the support radius is r − ½.
        width: Width of the smoothstep transition, BUMP_WIDTH_FRACTION·(r − ½) by default.

    Returns:
        The band-limited bump.

    Raises:
        ConfigurationError: If the bump does not fit the domain or the plateau is empty.
    """
    support = r - 0.5
    if width is None:
        width = BUMP_WIDTH_FRACTION * support
    if not (support > 0 and 0 < width <= support):
        raise ConfigurationError(
            f"Plateau bump needs r >= 1/2 + width > 1/2, got r={r} width={width}"
        )
    extent = basis.max_plateau_extent()
    if support > extent * (1 + 1e-12):
        raise ConfigurationError(
            f"Plateau bump of support radius {support} does not fit the domain (max {extent})"
        )

    profile = smoothstep((support - basis.distance_to_center()) / width)
    logger.debug(f"Plateau bump r={r} width={width} support={support}")
    return SpectralField.from_values(basis, profile)


def residual_terms(u: SpectralField, p: Params) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Coefficients of (Δ+1)²u − αu, −βu² and u³ on the represented modes.

    The linear term is exact in the eigenbasis. The grid holds at least 2N+1
    (box) or 4N+1 (torus) points per axis, so the projections of the quadratic
    and cubic terms onto modes up to N are free of aliasing.
    """
    basis = u.basis
    values = u.values
    linear = basis.eigen.symbol(p.alpha) * u.coeffs
    quadratic = basis.forward(-p.beta * values**2)
    cubic = basis.forward(values**3)
    return linear, quadratic, cubic


def strong_residual(u: SpectralField, p: Params) -> float:
    """Relative L₂ norm of (Δ+1)²u − αu − βu² + u³ projected on the represented modes.

    The norm is relative to the sum of the norms of the three projected terms,
    and 0 for the zero field.
    """
    if u.is_zero():
        return 0.0
    basis = u.basis
    linear, quadratic, cubic = residual_terms(u, p)

    def norm(coeffs: np.ndarray) -> float:
        return math.sqrt(max(basis.inner(coeffs, coeffs), 0.0))

    scale = norm(linear) + norm(quadratic) + norm(cubic)
    return norm(linear + quadratic + cubic) / scale if scale > 0 else 0.0
