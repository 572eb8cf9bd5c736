"""High-level entry point bundling parameters, domain and basis."""

from collections.abc import Sequence
import logging
from typing import final

import numpy as np

from .bases.base import BaseBasis
from .core import make_basis
from .descent import DescentOptions
from .domain import DomainSpec
from .equilibria import (
    DEFAULT_SWEEP,
    ConstantSolutions,
    SobolevConstants,
    Thresholds,
    constant_solutions,
    sobolev_constants,
    thresholds,
)
from .field import SpectralField
from .functionals import FibrationData, fibration_classify
from .nehari import (
    BumpBound,
    InequalityReport,
    IrreducibilityReport,
    NehariResult,
    SolverOptions,
    irreducibility_diagnostics,
    minimize_ridge,
    plateau_bump_bound,
    profile_lower_bounds,
    verify_solution,
)
from .params import Params

# Get logger
logger = logging.getLogger(__name__)


class SwiftHohenberg:
    """Swift–Hohenberg problem on one domain at one truncation."""

    def __init__(
        self,
        alpha: float,
        beta: float,
        domain: DomainSpec,
        modes: int | None = None,
        grid: int | None = None,
    ) -> None:
        """Initialize the problem.

        Args:
            alpha: Linear coefficient α < 0.
            beta: Quadratic coefficient β > 0.
            domain: Box or torus domain.
            modes: Truncation N per axis, defaults per dimension.
            grid: Collocation points per axis, defaults to a fast size above the minimum.
        """
        self.params = Params(alpha, beta)
        self.domain = domain
        self.basis: BaseBasis = make_basis(domain, modes, grid)
        self._sobolev: SobolevConstants | None = None
        logger.debug(
            f"Problem α={alpha} β={beta} on {domain.kind} N={self.basis.modes} M={self.basis.grid}"
        )

    @final
    def field(self, values: np.ndarray) -> SpectralField:
        """Field from grid values on this problem's basis."""
        return SpectralField.from_values(self.basis, values)

    @final
    def constants(self) -> ConstantSolutions:
        """Nonzero constant solutions c₋ < c₊ and their energies."""
        return constant_solutions(self.params, self.domain)

    @final
    def sobolev(
        self,
        starts: int = 8,
        seed: int = 0,
        options: DescentOptions | None = None,
        threads: int | None = None,
    ) -> SobolevConstants:
        """Estimates of S₂, S₃, S₄; the result of the last call is kept for solve()."""
        self._sobolev = sobolev_constants(self.basis, self.params, starts, seed, options, threads)
        return self._sobolev

    @final
    def thresholds(
        self,
        R_sweep: Sequence[float] = DEFAULT_SWEEP,
        starts: int = 8,
        seed: int = 0,
        options: DescentOptions | None = None,
        threads: int | None = None,
    ) -> Thresholds:
        """β₀ on this domain, the β* estimate over a stretch sweep, and 2S₂."""
        return thresholds(
            self.params,
            self.domain,
            R_sweep,
            modes=self.basis.modes,
            grid=self.basis.grid,
            starts=starts,
            seed=seed,
            options=options,
            threads=threads,
            constants=self._sobolev,
        )

    @final
    def fibration(self, v: SpectralField) -> FibrationData:
        """Closed-form fibration of a direction."""
        return fibration_classify(v, self.params)

    @final
    def bump(self, r: float | None = None) -> BumpBound:
        """Ridge energy of the largest plateau bump that fits the domain."""
        return plateau_bump_bound(self.basis, self.params, r)

    @final
    def solve(self, options: SolverOptions | None = None) -> NehariResult:
        """Ridge-Nehari minimizer by multistart descent.

        Sobolev-dependent checks are included when sobolev() was called before.

        Raises:
            NoRidgeError: If every start direction has a monotonous fibration.
        """
        return minimize_ridge(self.basis, self.params, options, self._sobolev, self.bump())

    @final
    def verify(self, U: SpectralField, certify_tolerance: float = 1e-8) -> InequalityReport:
        """Check a candidate solution against the ridge inequalities."""
        bump = self.bump()
        return verify_solution(
            U, self.params, self._sobolev, bump.energy, certify_tolerance=certify_tolerance
        )

    @final
    def diagnostics(self, U: SpectralField) -> IrreducibilityReport:
        """Coordinate dependence of a solution and its energy comparisons.

        Profile energy bounds are included when sobolev() was called before.
        """
        profile = (
            profile_lower_bounds(self.basis, self.params) if self._sobolev is not None else None
        )
        return irreducibility_diagnostics(U, self.params, self.bump(), profile)

    @final
    def stretched(self, R: float) -> "SwiftHohenberg":
        """Same problem on the domain stretched by R, at the same truncation."""
        return SwiftHohenberg(
            self.params.alpha,
            self.params.beta,
            self.domain.with_stretch(R),
            modes=self.basis.modes,
        )
