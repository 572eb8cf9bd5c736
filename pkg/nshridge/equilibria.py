"""Constant solutions, Sobolev-type constants and existence thresholds."""

from collections.abc import Sequence
from dataclasses import dataclass, field
import logging
import math
from typing import Any

import numpy as np

from .bases.base import BaseBasis
from .core import make_basis
from .descent import DescentOptions, DescentResult, Evaluation, SphereDescent
from .domain import DomainSpec
from .exceptions import ConfigurationError
from .field import SpectralField
from .params import Params
from .utils.formatters import TwoColumnFormatMixin
from .utils.parallel import ordered_map
from .utils.quantities import InequalityCheck, lower_bound

# Get logger
logger = logging.getLogger(__name__)

DEFAULT_SWEEP = (1.0, 2.0, 4.0, 8.0)

# Sobolev searches stop on a relative quotient decrease below 1e-10 over 50 iterations
SOBOLEV_OPTIONS = DescentOptions(max_iterations=5000, gtol=1e-6, ftol=1e-10, window=50)

TRUNCATION_NOTE = "upper bound: minimized over the truncated space"


def energy_constant(p: Params, c: float, volume: float) -> float:
    """E of the constant field c, |Ω|(½(1−α)c² − ⅓βc³ + ¼c⁴)."""
    return volume * (0.5 * (1.0 - p.alpha) * c**2 - p.beta * c**3 / 3 + c**4 / 4)


@dataclass
class ConstantSolutions(TwoColumnFormatMixin):
    """Nonzero constant solutions c₋ < c₊ of (1−α) − βc + c² = 0."""

    params: Params
    volume: float
    c_minus: float
    c_plus: float
    _format_prefix: str = field(default="constants_", init=False)

    @property
    def m_minus(self) -> float:
        """−3 + 2α + βc₋, the zeroth-order coefficient of d²E at c₋."""
        return -3.0 + 2.0 * self.params.alpha + self.params.beta * self.c_minus

    @property
    def m_plus(self) -> float:
        """−3 + 2α + βc₊."""
        return -3.0 + 2.0 * self.params.alpha + self.params.beta * self.c_plus

    @property
    def E_minus(self) -> float:
        """E[c₋] over the domain."""
        return energy_constant(self.params, self.c_minus, self.volume)

    @property
    def E_plus(self) -> float:
        """E[c₊] over the domain, (1/12)c₊²(2(1−α) − c₊²)|Ω|."""
        return energy_constant(self.params, self.c_plus, self.volume)

    @property
    def plus_below_zero_regime(self) -> bool:
        """β² > (9/2)(1−α), where E[c₊] < 0 and d²E[c₊] dominates Q."""
        return self.params.beta**2 > 4.5 * (1.0 - self.params.alpha)

    def growth_check(self) -> InequalityCheck:
        """E[c₋] ≥ (1−α)³/(6β²)·|Ω|, the linear growth of E[c₋] with the volume."""
        a = 1.0 - self.params.alpha
        bound = a**3 / (6 * self.params.beta**2) * self.volume
        return lower_bound("E_minus_growth", self.E_minus, bound)

    def to_dict(self) -> dict[str, Any]:
        """Convert the constant solutions to a JSON-ready dictionary."""
        return {
            "c_minus": self.c_minus,
            "c_plus": self.c_plus,
            "m_minus": self.m_minus,
            "m_plus": self.m_plus,
            "E_minus": self.E_minus,
            "E_plus": self.E_plus,
            "volume": self.volume,
            "plus_below_zero_regime": self.plus_below_zero_regime,
            "checks": {"E_minus_growth": self.growth_check().to_dict()},
        }


def constant_solutions(p: Params, domain: DomainSpec) -> ConstantSolutions:
    """Roots of (1−α) − βc + c² = 0 and their energies on the domain.

    Raises:
        ConfigurationError: If β ≤ 2√(1−α), where no nonzero constant solution exists.
    """
    a = 1.0 - p.alpha
    if p.beta <= p.beta_min_constants:
        raise ConfigurationError(
            f"No constant solutions: β ≤ 2√(1−α) (β={p.beta}, 2√(1−α)={p.beta_min_constants})"
        )
    root = math.sqrt(p.beta**2 - 4.0 * a)
    # c₋ from the product of the roots avoids cancellation
    return ConstantSolutions(
        params=p,
        volume=domain.volume,
        c_minus=2.0 * a / (p.beta + root),
        c_plus=(p.beta + root) / 2.0,
    )


def second_variation_at_constant(p: Params, c: float, h: SpectralField) -> float:
    """d²E[c](h,h) = ∫(Δh+h)² + (−α − 2βc + 3c²)∫h²."""
    mu = h.basis.eigen.mu
    curvature = h.basis.inner(h.coeffs, (mu - 1.0) ** 2 * h.coeffs)
    return curvature + (-p.alpha - 2.0 * p.beta * c + 3.0 * c**2) * h.norm_squared()


@dataclass
class SobolevEstimate(TwoColumnFormatMixin):
    """Best quotient Q[u]^{1/2}/|∫uᵐ|^{1/m} found by multistart descent."""

    m: int
    value: float
    minimizer: SpectralField
    converged: bool
    best_restart: int
    restart_values: list[float]
    iterations: int
    _format_prefix: str = field(default="sobolev_", init=False)

    @property
    def running_best(self) -> list[float]:
        """Best value after each restart, nonincreasing."""
        return list(np.minimum.accumulate(self.restart_values))

    def to_dict(self) -> dict[str, Any]:
        """Convert the estimate to a JSON-ready dictionary, without the minimizer."""
        return {
            "m": self.m,
            "value": self.value,
            "converged": self.converged,
            "best_restart": self.best_restart,
            "iterations": self.iterations,
            "restart_values": self.restart_values,
            "note": TRUNCATION_NOTE,
        }


class _QuotientObjective:
    """Quotient S = Q^{1/2}/|∫uᵐ|^{1/m} on the Q sphere with gradient S·∇log S."""

    def __init__(self, basis: BaseBasis, p: Params, m: int) -> None:
        self.basis = basis
        self.m = m
        self.symbol = basis.eigen.symbol(p.alpha)

    def __call__(self, x: np.ndarray) -> Evaluation | None:
        basis = self.basis
        values = basis.inverse(x)
        moment = basis.integral(values**self.m)
        if moment == 0.0 or not math.isfinite(moment):
            return None
        q = basis.inner(x, self.symbol * x)
        log_gradient = self.symbol * x / q - basis.forward(values ** (self.m - 1)) / moment
        quotient = math.sqrt(q) / abs(moment) ** (1.0 / self.m)
        tangent = basis.inner(log_gradient, log_gradient / self.symbol) - (
            basis.inner(log_gradient, x) ** 2 / q
        )
        return Evaluation(
            value=quotient,
            gradient=quotient * log_gradient,
            residual=math.sqrt(max(tangent, 0.0)),
        )


def _sobolev_starts(basis: BaseBasis, p: Params, starts: int, seed: int) -> list[np.ndarray]:
    """Constant start followed by `starts` random band-limited starts."""
    weight = 1.0 / basis.eigen.symbol(p.alpha)
    children = np.random.SeedSequence(seed).spawn(starts)
    return [basis.constant(1.0)] + [
        basis.random_coeffs(np.random.default_rng(child), weight) for child in children
    ]


def sobolev_constant(
    basis: BaseBasis,
    p: Params,
    m: int,
    starts: int = 8,
    seed: int = 0,
    options: DescentOptions | None = None,
    threads: int | None = None,
) -> SobolevEstimate:
    """Estimate S_m by minimizing the quotient over the truncated space.

    The result bounds the true constant from above. For m = 3 the sign of the
    cubic integral is irrelevant since its absolute value enters.

    Args:
        basis: Truncated basis of the domain.
        p: Parameters; only α enters.
        m: Power, 2, 3 or 4.
        starts: Random starts in addition to the constant start.
        seed: Seed of the random starts.
        options: Descent options, defaults to the Sobolev stopping rule.
        threads: Worker threads for the restarts.

    Returns:
        The best estimate; `converged` is False when no restart converged.
    """
    if m not in (2, 3, 4):
        raise ConfigurationError(f"Sobolev power must be 2, 3 or 4, got {m}")
    if starts < 0:
        raise ConfigurationError(f"Number of starts must be nonnegative, got {starts}")

    engine = SphereDescent(basis.eigen.symbol(p.alpha), options or SOBOLEV_OPTIONS)
    objective = _QuotientObjective(basis, p, m)

    def run(x0: np.ndarray) -> DescentResult:
        return engine.minimize(objective, x0)

    results = ordered_map(run, _sobolev_starts(basis, p, starts, seed), threads)
    restart_values = [
        r.evaluation.value if r.evaluation is not None else math.inf for r in results
    ]
    # ties go to the lowest restart index
    best = min(range(len(results)), key=lambda i: (restart_values[i], i))
    best_result = results[best]
    if best_result.evaluation is None:
        raise ConfigurationError(f"Every start for S_{m} had a vanishing moment")

    converged = any(r.converged for r in results)
    if not converged:
        logger.warning(f"No restart for S_{m} converged, reporting the best value found")
    logger.info(f"S_{m} ≈ {best_result.evaluation.value:.17g} (restart {best})")
    return SobolevEstimate(
        m=m,
        value=best_result.evaluation.value,
        minimizer=SpectralField(basis, best_result.x),
        converged=converged,
        best_restart=best,
        restart_values=restart_values,
        iterations=sum(r.iterations for r in results),
    )


@dataclass
class SobolevConstants(TwoColumnFormatMixin):
    """Estimates of S₂, S₃, S₄ on one domain."""

    S2: SobolevEstimate
    S3: SobolevEstimate
    S4: SobolevEstimate
    S2_exact: float
    """√(min((μ−1)² − α)), the exact S₂ of the truncated space."""

    bracket: tuple[float, float]
    """(√(−α), √(1−α)), the interval containing S₂."""

    _format_prefix: str = field(default="sobolev_", init=False)

    @property
    def values(self) -> tuple[float, float, float]:
        """(S₂, S₃, S₄) estimates."""
        return self.S2.value, self.S3.value, self.S4.value

    @property
    def beta0(self) -> float:
        """2·max(√(1−α), S₃³/S₄²), using the bracket's upper end for √(1−α)."""
        return 2.0 * max(self.bracket[1], self.S3.value**3 / self.S4.value**2)

    def bracket_checks(self) -> list[InequalityCheck]:
        """√(−α) ≤ S₂ ≤ √(1−α) for the descent estimate."""
        low, high = self.bracket
        return [
            lower_bound("S2_above_sqrt_minus_alpha", self.S2.value, low, tolerance=1e-8),
            lower_bound("S2_below_sqrt_one_minus_alpha", high, self.S2.value, tolerance=1e-8),
        ]

    def to_dict(self) -> dict[str, Any]:
        """Convert the constants to a JSON-ready dictionary."""
        return {
            "S2": self.S2.value,
            "S3": self.S3.value,
            "S4": self.S4.value,
            "S2_exact": self.S2_exact,
            "converged": self.S2.converged and self.S3.converged and self.S4.converged,
            "note": TRUNCATION_NOTE,
            "details": {f"S{e.m}": e.to_dict() for e in (self.S2, self.S3, self.S4)},
            "checks": {check.name: check.to_dict() for check in self.bracket_checks()},
        }


def sobolev_constants(
    basis: BaseBasis,
    p: Params,
    starts: int = 8,
    seed: int = 0,
    options: DescentOptions | None = None,
    threads: int | None = None,
) -> SobolevConstants:
    """Estimate S₂, S₃ and S₄ on the basis domain."""
    estimates = [
        sobolev_constant(basis, p, m, starts=starts, seed=seed, options=options, threads=threads)
        for m in (2, 3, 4)
    ]
    return SobolevConstants(
        S2=estimates[0],
        S3=estimates[1],
        S4=estimates[2],
        S2_exact=math.sqrt(float(np.min(basis.eigen.symbol(p.alpha)))),
        bracket=(math.sqrt(-p.alpha), math.sqrt(1.0 - p.alpha)),
    )


@dataclass
class SweepPoint:
    """Sobolev constants at one stretch factor."""

    R: float
    constants: SobolevConstants

    def to_dict(self) -> dict[str, Any]:
        """Convert the sweep point to a JSON-ready dictionary."""
        s2, s3, s4 = self.constants.values
        return {"R": self.R, "S2": s2, "S3": s3, "S4": s4, "beta0": self.constants.beta0}


@dataclass
class Thresholds(TwoColumnFormatMixin):
    """Existence thresholds in β for fixed α and domain."""

    params: Params
    constants: SobolevConstants
    """Constants on the domain itself."""

    sweep: list[SweepPoint]
    """Constants over the stretch sweep."""

    _format_prefix: str = field(default="thresholds_", init=False)

    @property
    def beta_min_constants(self) -> float:
        """2√(1−α)."""
        return self.params.beta_min_constants

    @property
    def beta0(self) -> float:
        """Sufficient β for a ridge-Nehari solution on the domain."""
        return self.constants.beta0

    @property
    def beta_star_estimate(self) -> float:
        """Largest β₀ over the sweep, an estimate of the supremum over R ≥ 1."""
        return max([self.beta0] + [point.constants.beta0 for point in self.sweep])

    @property
    def beta_nehari_empty(self) -> float:
        """2S₂: below it the Nehari manifold is empty and zero is the only solution."""
        return 2.0 * self.constants.S2.value

    def to_dict(self) -> dict[str, Any]:
        """Convert the thresholds to a JSON-ready dictionary."""
        return {
            "beta_min_constants": self.beta_min_constants,
            "beta0": self.beta0,
            "beta_star_estimate": self.beta_star_estimate,
            "beta_star_exceeds_two": self.beta_star_estimate > 2.0,
            "beta_nehari_empty": self.beta_nehari_empty,
            "sweep": [point.to_dict() for point in self.sweep],
        }


def thresholds(
    p: Params,
    domain: DomainSpec,
    R_sweep: Sequence[float] = DEFAULT_SWEEP,
    modes: int | None = None,
    grid: int | None = None,
    starts: int = 8,
    seed: int = 0,
    options: DescentOptions | None = None,
    threads: int | None = None,
    constants: SobolevConstants | None = None,
) -> Thresholds:
    """Compute β₀, the β* estimate over a stretch sweep and the emptiness bound.

    Args:
        p: Parameters.
        domain: Domain; sweep values replace its stretch factor.
        R_sweep: Stretch factors of the sweep.
        modes: Truncation per axis.
        grid: Collocation points per axis.
        starts: Random starts per Sobolev search.
        seed: Seed of the random starts.
        options: Descent options for the Sobolev searches.
        threads: Worker threads.
        constants: Precomputed constants on `domain`.

    Returns:
        The thresholds.
    """
    if not R_sweep:
        raise ConfigurationError("Stretch sweep must not be empty")
    if any(not (math.isfinite(R) and R >= 1.0) for R in R_sweep):
        raise ConfigurationError(f"Sweep stretch factors must be >= 1, got {list(R_sweep)}")

    def constants_at(target: DomainSpec) -> SobolevConstants:
        basis = make_basis(target, modes, grid)
        return sobolev_constants(basis, p, starts, seed, options, threads)

    base = constants if constants is not None else constants_at(domain)
    sweep = []
    for R in R_sweep:
        if math.isclose(R, domain.stretch):
            sweep.append(SweepPoint(R=R, constants=base))
        else:
            sweep.append(SweepPoint(R=R, constants=constants_at(domain.with_stretch(R))))
        logger.info(f"Sweep R={R}: beta0={sweep[-1].constants.beta0:.17g}")
    return Thresholds(params=p, constants=base, sweep=sweep)
