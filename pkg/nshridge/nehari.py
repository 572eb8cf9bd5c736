"""Ridge-Nehari minimization and the diagnostics of its minimizer.

The energy restricted to the ridge of the Nehari manifold equals the reduced
functional G(v) = E[t̃(v)v], homogeneous of degree 0 in v. It is minimized over
directions on the Q sphere; its gradient is t̃·dE[t̃v] since L[t̃v] = 0.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
import logging
import math
from typing import Any

import numpy as np

from .bases.base import BaseBasis
from .core import make_basis
from .descent import (
    DescentOptions,
    DescentResult,
    Evaluation,
    IterationRecord,
    SphereDescent,
)
from .domain import DomainKind, make_domain
from .equilibria import (
    ConstantSolutions,
    SobolevConstants,
    constant_solutions,
    sobolev_constant,
)
from .exceptions import ConfigurationError, FibrationError, NoRidgeError
from .field import SpectralField
from .functionals import (
    FibrationClass,
    FibrationData,
    energy_E,
    energy_lower_bound,
    fibration_classify,
    functional_H,
    functional_K1,
    functional_L,
    gradient_residual,
    moments,
)
from .params import Params
from .spectral import build_plateau_bump, quadratic_form_Q, strong_residual
from .utils.formatters import TwoColumnFormatMixin
from .utils.parallel import ordered_map
from .utils.quantities import InequalityCheck, lower_bound, upper_bound

# Get logger
logger = logging.getLogger(__name__)

# Energy fraction above which a solution counts as depending on an axis
AXIS_DEPENDENCE_THRESHOLD = 1e-3

# First constant offset tried on oscillating seeds, doubled until the seed reaches the ridge
SEED_OFFSET = 0.3
SEED_OFFSET_DOUBLINGS = 8

# Seeds aim for I[v] above 2/β by this relative margin
SEED_RIDGE_MARGIN = 0.02

# Relative tolerance of the rear-slope membership test
_SLOPE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class SolverOptions:
    """Multistart and stopping parameters of the ridge solver."""

    starts: int = 12
    """Number of start directions."""

    seed: int = 0
    """Seed of the random start directions."""

    max_iterations: int = 20000
    """Iteration budget per start."""

    gtol: float = 1e-6
    """Gradient residual threshold."""

    ftol: float = 1e-12
    """Relative decrease of G over `window` iterations below which G is stationary."""

    window: int = 25
    """Iterations the relative decrease is measured over."""

    certify_tolerance: float = 1e-8
    """H[U] ≤ −certify_tolerance·Q[U] certifies U off the end of the ridge."""

    threads: int | None = None
    """Worker threads, defaults to the environment-resolved limit."""

    def __post_init__(self) -> None:
        """Validate the options."""
        if not isinstance(self.starts, int) or self.starts < 1:
            raise ConfigurationError(f"starts must be a positive integer, got {self.starts}")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigurationError(f"seed must be a nonnegative integer, got {self.seed}")
        if not self.certify_tolerance > 0:
            raise ConfigurationError("certify_tolerance must be positive")
        self.descent_options()

    def descent_options(self) -> DescentOptions:
        """Options of the descent engine."""
        return DescentOptions(
            max_iterations=self.max_iterations,
            gtol=self.gtol,
            ftol=self.ftol,
            window=self.window,
        )


@dataclass(frozen=True)
class Seed:
    """Labelled start direction."""

    label: str
    coeffs: np.ndarray


def _axis_mode_nearest_one(basis: BaseBasis, axis: int) -> tuple[int, ...] | None:
    """Mode varying along one axis only whose eigenvalue is closest to 1."""
    indices = basis.mode_indices()
    others = [i for i in range(basis.dimension) if i != axis]
    mask = indices[axis] > 0
    for other in others:
        mask &= indices[other] == 0
    if not np.any(mask):
        return None
    distance = np.where(mask, np.abs(basis.eigen.mu - 1.0), np.inf)
    flat = int(np.argmin(distance))
    position = np.unravel_index(flat, basis.coeff_shape)
    return tuple(int(indices[(i, *position)]) for i in range(basis.dimension))


def _hexagon_values(basis: BaseBasis) -> np.ndarray:
    """Three unit waves at 120° in the (x₁, x₂) plane."""
    coordinates = basis.grid_coordinates()
    total = np.zeros(basis.grid_shape)
    for angle in (0.0, 2 * math.pi / 3, 4 * math.pi / 3):
        total += np.cos(math.cos(angle) * coordinates[0] + math.sin(angle) * coordinates[1])
    return total / 3


def _unit_rms(basis: BaseBasis, coeffs: np.ndarray) -> np.ndarray:
    """Rescale coefficients to unit root-mean-square value."""
    rms = math.sqrt(basis.inner(coeffs, coeffs) / basis.domain.volume)
    return coeffs / rms if rms > 0 else coeffs


def _lift_onto_ridge(basis: BaseBasis, p: Params, coeffs: np.ndarray, label: str) -> np.ndarray:
    """Add the smallest constant offset SEED_OFFSET·2ᵏ that gives a ridge point.

    The target is I[v] > (2/β)(1 + SEED_RIDGE_MARGIN). When no offset up to
    SEED_OFFSET_DOUBLINGS doublings reaches it, the candidate with the largest
    I is returned; its start is reported as monotonous when I ≤ 2/β.
    """
    target = 2.0 / p.beta * (1.0 + SEED_RIDGE_MARGIN)
    best_ratio, best = -math.inf, coeffs
    for k in range(SEED_OFFSET_DOUBLINGS + 1):
        offset = SEED_OFFSET * 2.0**k
        candidate = coeffs + basis.constant(offset)
        ratio = fibration_classify(SpectralField(basis, candidate), p).I
        if ratio > target:
            logger.debug(f"Seed {label}: offset {offset:g}, I={ratio:.6g}")
            return candidate
        if ratio > best_ratio:
            best_ratio, best = ratio, candidate
    logger.debug(f"Seed {label}: no offset reaches I > {target:.6g}, best I={best_ratio:.6g}")
    return best


def seed_directions(basis: BaseBasis, p: Params, starts: int = 12, seed: int = 0) -> list[Seed]:
    """Start directions: plateau bump, noisy constant, stripes, hexagons, then noise.

    Oscillating seeds carry the smallest constant offset that puts their
    direction on the ridge with some margin, so every start can descend when
    β admits a ridge near the constant direction. Random parts favour modes
    near μ = 1.

    Args:
        basis: Basis of the domain.
        p: Parameters; α weights the random modes, β sets the ridge target.
        starts: Number of seeds returned.
        seed: Seed of the random parts.

    Returns:
        Exactly `starts` seeds.
    """
    rngs = [np.random.default_rng(child) for child in np.random.SeedSequence(seed).spawn(starts)]
    weight = 1.0 / ((basis.eigen.mu - 1.0) ** 2 + 1.0)
    seeds: list[Seed] = []

    def lifted(label: str, coeffs: np.ndarray) -> Seed:
        return Seed(label, _lift_onto_ridge(basis, p, coeffs, label))

    extent = basis.max_plateau_extent()
    if extent >= 0.5:
        bump = build_plateau_bump(basis, r=extent + 0.5)
        if fibration_classify(bump, p).classification is FibrationClass.NON_MONOTONOUS:
            seeds.append(Seed("bump", np.array(bump.coeffs)))
        else:
            seeds.append(lifted("bump", np.array(bump.coeffs)))

    noise = _unit_rms(basis, basis.random_coeffs(rngs[0], weight))
    seeds.append(Seed("constant", basis.constant(1.0) + 0.1 * noise))

    for axis in range(basis.dimension):
        index = _axis_mode_nearest_one(basis, axis)
        if index is not None:
            seeds.append(lifted(f"stripe-{axis + 1}", basis.wave_mode(index)))

    if basis.dimension >= 2:
        hexagon = basis.forward(_hexagon_values(basis))
        seeds.append(lifted("hexagon", _unit_rms(basis, hexagon)))

    index = 0
    while len(seeds) < starts:
        rng = rngs[len(seeds)]
        noise = _unit_rms(basis, basis.random_coeffs(rng, weight))
        seeds.append(lifted(f"noise-{index}", noise))
        index += 1
    return seeds[:starts]


def ridge_project(v: SpectralField, p: Params) -> tuple[float, SpectralField]:
    """Scale a direction onto the ridge of the Nehari manifold.

    Returns:
        Tuple (t̃, t̃v); t̃ is negative when ∫v³ < 0.

    Raises:
        FibrationError: If the fibration of v is monotonous.
    """
    data = fibration_classify(v, p)
    if data.t1 is None:
        raise FibrationError("Monotonous fibration has no ridge point")
    t = data.sign * data.t1
    return t, v * t


@dataclass
class Pullback:
    """Result of pulling a rear-slope field back onto the ridge."""

    t: float
    """Scaling t* ∈ (0, 1]."""

    field: SpectralField
    """t*·u."""

    K0_initial: float
    """K₀[u]."""

    K0_projected: float
    """K₀[t*u]."""

    @property
    def K0_decreased(self) -> bool:
        """K₀[t*u] ≤ K₀[u] up to rounding."""
        return self.K0_projected <= self.K0_initial + 1e-12 * max(1.0, abs(self.K0_initial))


def in_rear_slope(u: SpectralField, p: Params) -> bool:
    """L[u] ≤ 0, H[u] ≤ 0 and K₁[u] ≥ 0, with a rounding tolerance relative to Q."""
    tolerance = _SLOPE_TOLERANCE * quadratic_form_Q(u, p)
    return (
        functional_L(u, p) <= tolerance
        and functional_H(u, p) <= tolerance
        and functional_K1(u, p) >= -tolerance
    )


def pullback(u: SpectralField, p: Params) -> Pullback:
    """Scale a rear-slope field down onto the ridge (or its end).

    Raises:
        FibrationError: If u is outside the rear slope.
    """
    if u.is_zero() or not in_rear_slope(u, p):
        raise FibrationError("Pullback needs L[u] ≤ 0, H[u] ≤ 0 and K₁[u] ≥ 0")
    data = fibration_classify(u, p)
    if data.t1 is None or data.sign < 0:
        raise FibrationError("Rear-slope field without a ridge point on its ray")
    t = min(data.t1, 1.0)
    return Pullback(t=t, field=u * t, K0_initial=data.K0(1.0), K0_projected=data.K0(t))


class RidgeObjective:
    """Reduced functional G(v) = E[t̃v] with gradient t̃·dE[t̃v].

    Undefined (None) where the fibration is not strictly non-monotonous.
    """

    def __init__(self, basis: BaseBasis, p: Params) -> None:
        """Initialize the objective."""
        self.basis = basis
        self.params = p
        self.symbol = basis.eigen.symbol(p.alpha)

    def fibration(self, x: np.ndarray) -> tuple[FibrationData, np.ndarray] | None:
        """Fibration data of a direction and its grid values."""
        basis = self.basis
        values = basis.inverse(x)
        squared = values**2
        q = basis.inner(x, self.symbol * x)
        b0 = basis.integral(squared * values)
        d = basis.integral(squared * squared)
        if not (q > 0 and d > 0):
            return None
        data = FibrationData(Q=q, B0=b0, D=d, beta=self.params.beta)
        if data.classification is not FibrationClass.NON_MONOTONOUS:
            return None
        return data, values

    def __call__(self, x: np.ndarray) -> Evaluation | None:
        """Evaluate G and its coefficient gradient."""
        result = self.fibration(x)
        if result is None:
            return None
        data, values = result
        t = data.sign * data.t1  # type: ignore[operator]
        ridge = t * values
        energy_gradient = self.symbol * (t * x) + self.basis.forward(
            ridge**2 * (ridge - self.params.beta)
        )
        q_ridge = t * t * data.Q
        dual = self.basis.inner(energy_gradient, energy_gradient / self.symbol)
        return Evaluation(
            value=data.ridge_energy,  # type: ignore[arg-type]
            gradient=t * energy_gradient,
            residual=math.sqrt(max(dual, 0.0) / q_ridge),
        )


@dataclass
class StartReport:
    """Outcome of one start of the multistart search."""

    index: int
    label: str
    status: str
    """`converged`, `stalled`, `max-iterations` or `monotonous`."""

    energy: float | None
    iterations: int
    residual: float | None

    def to_dict(self) -> dict[str, Any]:
        """Convert the report to a dictionary."""
        return {
            "index": self.index,
            "label": self.label,
            "status": self.status,
            "energy": self.energy,
            "iterations": self.iterations,
            "residual": self.residual,
        }


@dataclass
class InequalityReport(TwoColumnFormatMixin):
    """Inequality checks with slacks for a ridge solution."""

    checks: list[InequalityCheck]
    _format_prefix: str = field(default="verify_", init=False)

    @property
    def passed(self) -> bool:
        """True when every decisive check passed."""
        return all(check.passed for check in self.checks if not check.informational)

    def get(self, name: str) -> InequalityCheck:
        """Check by name.

        Raises:
            KeyError: If no check has that name.
        """
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def to_dict(self) -> dict[str, Any]:
        """Convert the report to a JSON-ready dictionary."""
        return {
            "passed": self.passed,
            "checks": {check.name: check.to_dict() for check in self.checks},
        }


def verify_solution(
    U: SpectralField,
    p: Params,
    constants: SobolevConstants | None = None,
    bump_energy: float | None = None,
    certify_tolerance: float = 1e-8,
    samples: Sequence[float] | None = None,
) -> InequalityReport:
    """Check a ridge solution against the ridge inequalities.

    Checks needing Sobolev constants are included only when `constants` is
    given; the bump bound only when `bump_energy` is given. The end-of-ridge
    energy S₄⁴/12 is reported as informational.

    Args:
        U: Candidate ridge solution.
        p: Parameters.
        constants: Sobolev constants of the domain.
        bump_energy: Ridge energy of a plateau bump on the domain.
        certify_tolerance: Relative margin for H[U] < 0.
        samples: Scalings t for E[tU] ≥ Q[tU]/12, defaults to 0.1, 0.2, ..., 1.

    Returns:
        The inequality report.
    """
    if U.is_zero():
        raise FibrationError("Cannot verify the zero field")
    q, b0, d = moments(U, p)
    data = FibrationData(Q=q, B0=b0, D=d, beta=p.beta)
    energy = data.energy(1.0)
    L = q - p.beta * b0 + d
    H = 2 * q - 3 * p.beta * b0 + 4 * d

    checks = [
        upper_bound("nehari_L_relative", abs(L) / q, 1e-8, tolerance=0.0),
        upper_bound("ridge_H_relative", H / q, -certify_tolerance, tolerance=0.0),
        energy_lower_bound(U, p),
    ]

    ts = np.linspace(0.1, 1.0, 10) if samples is None else samples
    # the fibration polynomial uses the sign-normalized direction
    checks.append(data.ray_coercivity([data.sign * float(t) for t in ts], "ridge_coercive"))

    if constants is not None:
        s2, s3, s4 = constants.values
        l4 = d**0.25
        checks.append(lower_bound("L4_separation", l4, s2 * s4 / p.beta))
        if p.beta > math.sqrt(2.0) * s2:
            sharp = s2 * s4 / math.sqrt(p.beta**2 - 2.0 * s2**2)
            checks.append(lower_bound("L4_separation_sharp", l4, sharp))
        checks.append(upper_bound("energy_growth_order", energy, s3**6 / (3 * p.beta**2)))
        checks.append(
            lower_bound("end_of_ridge_energy", energy, s4**4 / 12, informational=True)
        )
    if bump_energy is not None:
        checks.append(upper_bound("bump_energy_bound", energy, bump_energy))

    report = InequalityReport(checks=checks)
    for check in checks:
        if not check.passed and not check.informational:
            logger.warning(f"Inequality {check.name} failed with slack {check.slack}")
    return report


@dataclass
class BumpBound:
    """Ridge energy of a plateau bump, independent of the domain stretch."""

    r: float
    I: float  # noqa: E741
    energy: float | None
    classification: FibrationClass

    def to_dict(self) -> dict[str, Any]:
        """Convert the bound to a dictionary."""
        return {
            "r": self.r,
            "I": self.I,
            "energy": self.energy,
            "classification": self.classification.value,
        }


def plateau_bump_bound(basis: BaseBasis, p: Params, r: float | None = None) -> BumpBound:
    """Ridge energy E[t̃v] of the plateau bump of radius r.

    Args:
        basis: Basis of the domain.
        p: Parameters.
        r: Bump radius, defaults to the largest that fits.

    Returns:
        The bound; `energy` is None when the bump fibration is monotonous.
    """
    if r is None:
        r = basis.max_plateau_extent() + 0.5
    bump = build_plateau_bump(basis, r)
    data = fibration_classify(bump, p)
    energy = data.ridge_energy if data.classification is FibrationClass.NON_MONOTONOUS else None
    return BumpBound(r=r, I=data.I, energy=energy, classification=data.classification)


def _axis_lengths(basis: BaseBasis) -> list[float]:
    """Box side lengths, or torus generator lengths."""
    return [float(length) for length in np.linalg.norm(basis.domain.scaled_matrix, axis=0)]


@dataclass
class IrreducibilityReport(TwoColumnFormatMixin):
    """How strongly a solution depends on each coordinate."""

    axis_dependence: list[float]
    """Q-energy fraction of modes with a nonzero index along each axis."""

    marginal_variance: list[float]
    """Mean square of the axis-marginal profile minus the mean, per axis."""

    constant_deviation: float
    """‖U − mean(U)‖/‖U‖."""

    profile_energies: list[float]
    """E[U]/ℓᵢ per axis."""

    energy: float
    """E[U]."""

    profile_bounds: list[float] | None = None
    """Per axis, S₂²S₄⁴/(12β²) on the face without that axis.

    A ridge solution independent of xᵢ has profile energy E[U]/ℓᵢ at least the
    i-th bound. None off boxes and in 1D.
    """

    constants: ConstantSolutions | None = None
    """Constant solutions, when β exceeds 2√(1−α)."""

    bump: BumpBound | None = None
    """Plateau bump bound, when computed."""

    threshold: float = AXIS_DEPENDENCE_THRESHOLD

    _format_prefix: str = field(default="irreducibility_", init=False)

    @property
    def verdicts(self) -> list[str]:
        """`depends` or `independent` per axis."""
        return ["depends" if m > self.threshold else "independent" for m in self.axis_dependence]

    @property
    def irreducible(self) -> bool:
        """True when the solution depends on every axis."""
        return all(m > self.threshold for m in self.axis_dependence)

    @property
    def profile_excludes_independence(self) -> list[bool] | None:
        """Per axis, E[U]/ℓᵢ below the profile bound, so U cannot be independent of xᵢ."""
        if self.profile_bounds is None:
            return None
        return [
            energy < bound
            for energy, bound in zip(self.profile_energies, self.profile_bounds, strict=True)
        ]

    @property
    def below_constant(self) -> bool | None:
        """E[U] < E[c₋]."""
        return self.energy < self.constants.E_minus if self.constants is not None else None

    @property
    def below_bump(self) -> bool | None:
        """E[U] ≤ E[t̃·bump]."""
        if self.bump is None or self.bump.energy is None:
            return None
        return self.energy <= self.bump.energy * (1 + 1e-10)

    def to_dict(self) -> dict[str, Any]:
        """Convert the report to a JSON-ready dictionary."""
        return {
            "axis_dependence": self.axis_dependence,
            "marginal_variance": self.marginal_variance,
            "constant_deviation": self.constant_deviation,
            "profile_energies": self.profile_energies,
            "profile_bounds": self.profile_bounds,
            "profile_excludes_independence": self.profile_excludes_independence,
            "verdicts": self.verdicts,
            "irreducible": self.irreducible,
            "threshold": self.threshold,
            "energy": self.energy,
            "E_minus": self.constants.E_minus if self.constants is not None else None,
            "below_constant": self.below_constant,
            "bump": self.bump.to_dict() if self.bump is not None else None,
            "below_bump": self.below_bump,
        }


def profile_lower_bounds(
    basis: BaseBasis,
    p: Params,
    starts: int = 4,
    seed: int = 0,
    threads: int | None = None,
) -> list[float] | None:
    """Per axis, the energy bound S₂²S₄⁴/(12β²) of a profile on the face without that axis.

    A ridge solution on a box that does not depend on xᵢ restricts to a ridge
    point of the face box, whose energy is at least this bound; its energy per
    unit length along xᵢ is that profile energy. The face constants are descent
    estimates at the same truncation, computed once per distinct face.

    Args:
        basis: Basis of the domain.
        p: Parameters.
        starts: Random starts per Sobolev search.
        seed: Seed of the random starts.
        threads: Worker threads.

    Returns:
        One bound per axis, or None for tori and 1D boxes.
    """
    if basis.domain.kind is not DomainKind.BOX or basis.dimension < 2:
        return None
    lengths = basis.domain.scaled_lengths
    cache: dict[tuple[float, ...], float] = {}
    bounds = []
    for axis in range(basis.dimension):
        face = tuple(length for i, length in enumerate(lengths) if i != axis)
        if face not in cache:
            face_basis = make_basis(make_domain(DomainKind.BOX, list(face)), basis.modes)
            s2 = sobolev_constant(face_basis, p, 2, starts, seed, threads=threads).value
            s4 = sobolev_constant(face_basis, p, 4, starts, seed, threads=threads).value
            cache[face] = s2**2 * s4**4 / (12 * p.beta**2)
            logger.debug(f"Profile bound on face {face}: {cache[face]:.17g}")
        bounds.append(cache[face])
    return bounds


def irreducibility_diagnostics(
    U: SpectralField,
    p: Params,
    bump: BumpBound | None = None,
    profile_bounds: Sequence[float] | None = None,
) -> IrreducibilityReport:
    """Measure the dependence of a solution on each coordinate.

    Args:
        U: Converged solution.
        p: Parameters.
        bump: Plateau bump bound to compare against.
        profile_bounds: Per-axis profile energy bounds from profile_lower_bounds().

    Returns:
        The irreducibility report.
    """
    basis = U.basis
    power = np.abs(U.coeffs) ** 2
    q_power = basis.eigen.symbol(p.alpha) * power
    q_total = float(np.sum(q_power))
    indices = basis.mode_indices()

    dependence: list[float] = []
    variance: list[float] = []
    for axis in range(basis.dimension):
        along = indices[axis] != 0
        only = along.copy()
        for other in range(basis.dimension):
            if other != axis:
                only &= indices[other] == 0
        dependence.append(float(np.sum(q_power[along])) / q_total if q_total > 0 else 0.0)
        variance.append(float(np.sum(power[only])) / basis.domain.volume)

    total = float(np.sum(power))
    fluctuation = total - float(power[basis.zero_mode])
    deviation = math.sqrt(max(fluctuation, 0.0) / total) if total > 0 else 0.0

    energy = energy_E(U, p)
    constants = (
        constant_solutions(p, U.domain) if p.beta > p.beta_min_constants else None
    )
    return IrreducibilityReport(
        axis_dependence=dependence,
        marginal_variance=variance,
        constant_deviation=deviation,
        profile_energies=[energy / length for length in _axis_lengths(basis)],
        energy=energy,
        profile_bounds=list(profile_bounds) if profile_bounds is not None else None,
        constants=constants,
        bump=bump,
    )


@dataclass
class NehariResult(TwoColumnFormatMixin):
    """Ridge-Nehari minimizer with residuals and reports."""

    U: SpectralField
    params: Params
    energy: float
    Q_value: float
    L_relative: float
    """|L[U]|/Q[U]."""

    gradient_residual: float
    """‖dE[U]‖_*/‖U‖_Q."""

    strong_residual: float
    """Relative L₂ residual of the equation."""

    H_value: float
    converged: bool
    certified: bool
    """H[U] ≤ −certify_tolerance·Q[U]."""

    best_start: int
    starts: list[StartReport]
    history: list[IterationRecord]
    inequalities: InequalityReport
    diagnostics: IrreducibilityReport
    _format_prefix: str = field(default="solve_", init=False)

    @property
    def iterations(self) -> int:
        """Accepted iterations of the best start."""
        return self.history[-1].iteration if self.history else 0

    def to_dict(self) -> dict[str, Any]:
        """Convert the result to a JSON-ready dictionary, without the field."""
        return {
            "params": self.params.to_dict(),
            "domain": self.U.domain.to_dict(),
            "modes": self.U.modes,
            "grid": self.U.basis.grid,
            "energy": self.energy,
            "Q_value": self.Q_value,
            "L_relative": self.L_relative,
            "gradient_residual": self.gradient_residual,
            "strong_residual": self.strong_residual,
            "H_value": self.H_value,
            "converged": self.converged,
            "certified": self.certified,
            "best_start": self.best_start,
            "iterations": self.iterations,
            "starts": [start.to_dict() for start in self.starts],
            "inequalities": self.inequalities.to_dict(),
            "diagnostics": self.diagnostics.to_dict(),
        }


def _start_report(index: int, seed: Seed, result: DescentResult) -> StartReport:
    if result.evaluation is None:
        return StartReport(index, seed.label, "monotonous", None, 0, None)
    return StartReport(
        index=index,
        label=seed.label,
        status=result.reason.value,
        energy=result.evaluation.value,
        iterations=result.iterations,
        residual=result.evaluation.residual,
    )


def minimize_ridge(
    basis: BaseBasis,
    p: Params,
    options: SolverOptions | None = None,
    constants: SobolevConstants | None = None,
    bump: BumpBound | None = None,
) -> NehariResult:
    """Minimize the energy over the ridge of the Nehari manifold by multistart descent.

    Args:
        basis: Basis of the domain.
        p: Parameters.
        options: Solver options.
        constants: Sobolev constants for the threshold warning and the Sobolev checks.
        bump: Plateau bump bound for the diagnostics.

    Returns:
        The lowest-energy converged run, or the best flagged run when none converged.

    Raises:
        NoRidgeError: If every start direction has a monotonous fibration.
    """
    options = options or SolverOptions()
    if constants is not None and p.beta <= constants.beta0:
        logger.warning(f"β={p.beta} ≤ β₀={constants.beta0:.17g}, a ridge solution is not assured")
    elif p.beta <= p.beta_min_constants:
        logger.warning(f"β={p.beta} ≤ 2√(1−α), a ridge solution is not assured")

    seeds = seed_directions(basis, p, options.starts, options.seed)
    engine = SphereDescent(basis.eigen.symbol(p.alpha), options.descent_options())
    objective = RidgeObjective(basis, p)
    logger.info(f"Ridge search with {len(seeds)} starts, N={basis.modes}, M={basis.grid}")

    def run(item: Seed) -> DescentResult:
        return engine.minimize(objective, item.coeffs)

    results = ordered_map(run, seeds, options.threads)
    reports = [_start_report(i, s, r) for i, (s, r) in enumerate(zip(seeds, results, strict=True))]
    for report in reports:
        logger.info(
            f"start {report.index} ({report.label}): {report.status} energy={report.energy}"
        )

    feasible = [i for i, r in enumerate(results) if r.evaluation is not None]
    if not feasible:
        raise NoRidgeError()
    converged = [i for i in feasible if results[i].converged]
    pool = converged or feasible

    def energy_of(i: int) -> float:
        return results[i].evaluation.value  # type: ignore[union-attr]

    best = min(pool, key=lambda i: (energy_of(i), i))
    if not converged:
        logger.warning("No start converged, returning the best flagged run")

    _, U = ridge_project(SpectralField(basis, results[best].x), p)
    profile = (
        profile_lower_bounds(basis, p, threads=options.threads) if constants is not None else None
    )
    q = quadratic_form_Q(U, p)
    H = functional_H(U, p)
    certified = H <= -options.certify_tolerance * q
    if not certified:
        logger.warning(f"H[U]={H:.3e} does not certify U off the end of the ridge")

    return NehariResult(
        U=U,
        params=p,
        energy=energy_E(U, p),
        Q_value=q,
        L_relative=abs(functional_L(U, p)) / q,
        gradient_residual=gradient_residual(U, p),
        strong_residual=strong_residual(U, p),
        H_value=H,
        converged=bool(converged),
        certified=certified,
        best_start=best,
        starts=reports,
        history=results[best].history,
        inequalities=verify_solution(
            U,
            p,
            constants,
            bump.energy if bump is not None else None,
            options.certify_tolerance,
        ),
        diagnostics=irreducibility_diagnostics(U, p, bump, profile),
    )
