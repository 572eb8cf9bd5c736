"""Riemannian gradient descent on the unit sphere of the Q norm.

Both the Sobolev quotients and the reduced ridge functional are homogeneous of
degree 0, so they are minimized over directions. Iterates are kept on the
sphere ‖x‖_Q = 1 by the normalizing retraction; the metric is the Q inner
product, which preconditions by the diagonal of the linear operator.
"""

from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum
import logging
import math
from typing import Any

import numpy as np

from .exceptions import ConfigurationError

# Get logger
logger = logging.getLogger(__name__)


class StopReason(str, Enum):
    """Why a descent run ended."""

    # idiomatic way to prevent a __dict__ on immutable subclasses
    __slots__ = ()

    CONVERGED = "converged"
    """Stationary in value and gradient"""

    STALLED = "stalled"
    """Line search failed before the gradient criterion held"""

    MAX_ITERATIONS = "max-iterations"
    """Iteration budget exhausted"""

    INFEASIBLE = "infeasible"
    """Objective undefined at the start point"""

    def __format__(self, format_spec: str) -> str:
        """Format the enum value for display.

        Args:
            format_spec: Format specification string

        Returns:
            The enum value as a string.
        """
        return format(self.value, format_spec)


@dataclass(frozen=True)
class Evaluation:
    """Objective value at a sphere point with its coefficient gradient."""

    value: float
    """Objective value."""

    gradient: np.ndarray
    """Coefficient gradient, f(x + h) ≈ f(x) + Re⟨gradient, h⟩."""

    residual: float
    """Caller-defined stationarity measure compared against gtol."""


# None marks a point where the objective is undefined
Objective = Callable[[np.ndarray], Evaluation | None]


@dataclass(frozen=True)
class DescentOptions:
    """Stopping and line-search parameters."""

    max_iterations: int = 20000
    """Iteration budget."""

    gtol: float = 1e-6
    """Residual threshold for convergence."""

    ftol: float = 1e-12
    """Relative decrease over `window` iterations below which values are stationary."""

    window: int = 25
    """Iterations the relative decrease is measured over."""

    armijo: float = 1e-4
    """Sufficient-decrease constant."""

    min_step: float = 1e-14
    """Smallest step tried before the line search gives up."""

    initial_step: float = 1.0
    """First trial step before Barzilai–Borwein steps are available."""

    def __post_init__(self) -> None:
        """Validate tolerances."""
        if not isinstance(self.max_iterations, int) or self.max_iterations < 1:
            raise ConfigurationError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if not isinstance(self.window, int) or self.window < 1:
            raise ConfigurationError(f"window must be >= 1, got {self.window}")
        for name in ("gtol", "ftol", "min_step", "initial_step"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ConfigurationError(f"{name} must be positive, got {value}")
        if not 0 < self.armijo < 1:
            raise ConfigurationError(f"armijo must lie in (0, 1), got {self.armijo}")


@dataclass(frozen=True)
class IterationRecord:
    """One accepted iterate."""

    iteration: int
    value: float
    residual: float
    step: float

    def to_dict(self) -> dict[str, Any]:
        """Convert the record to a dictionary."""
        return {
            "iteration": self.iteration,
            "value": self.value,
            "residual": self.residual,
            "step": self.step,
        }


@dataclass
class DescentResult:
    """Final state of a descent run."""

    x: np.ndarray
    """Final sphere point."""

    evaluation: Evaluation | None
    """Objective at `x`, None when the start was infeasible."""

    iterations: int
    """Accepted iterations."""

    reason: StopReason
    """Why the run ended."""

    history: list[IterationRecord] = field(default_factory=list)
    """Accepted iterates, starting with the initial point."""

    @property
    def converged(self) -> bool:
        """True when the run met the stopping criterion."""
        return self.reason is StopReason.CONVERGED


class SphereDescent:
    """Barzilai–Borwein gradient descent with Armijo backtracking on ‖x‖_Q = 1.

    Args:
        symbol: Diagonal of the Q form, ((μ−1)² − α) per coefficient.
        options: Stopping and line-search parameters.
    """

    def __init__(self, symbol: np.ndarray, options: DescentOptions | None = None) -> None:
        """Initialize the engine."""
        if not np.all(symbol > 0):
            raise ConfigurationError("Q symbol must be positive on every mode")
        self.symbol = symbol
        self.options = options or DescentOptions()

    def q_inner(self, a: np.ndarray, b: np.ndarray) -> float:
        """Q inner product of two coefficient arrays."""
        return float(np.vdot(a, self.symbol * b).real)

    def normalize(self, x: np.ndarray) -> np.ndarray:
        """Retract onto the sphere."""
        norm = math.sqrt(self.q_inner(x, x))
        if norm == 0.0 or not math.isfinite(norm):
            raise ConfigurationError("Cannot normalize a zero or non-finite direction")
        return x / norm

    def riemannian_gradient(self, x: np.ndarray, gradient: np.ndarray) -> np.ndarray:
        """Q-gradient projected onto the tangent space at a unit point x."""
        return gradient / self.symbol - float(np.vdot(gradient, x).real) * x

    def minimize(self, objective: Objective, x0: np.ndarray) -> DescentResult:
        """Minimize a degree-0 homogeneous objective from a start direction.

        Args:
            objective: Callable returning an Evaluation, or None where undefined.
            x0: Start direction, any nonzero scale.

        Returns:
            The descent result.
        """
        opts = self.options
        x = self.normalize(np.asarray(x0))
        current = objective(x)
        if current is None:
            logger.debug("Descent start point is infeasible")
            return DescentResult(x=x, evaluation=None, iterations=0, reason=StopReason.INFEASIBLE)

        history = [IterationRecord(0, current.value, current.residual, 0.0)]
        values = [current.value]
        step = opts.initial_step
        previous: tuple[np.ndarray, np.ndarray] | None = None
        reason = StopReason.MAX_ITERATIONS
        iteration = 0

        while iteration < opts.max_iterations:
            if current.residual <= opts.gtol and len(values) > opts.window:
                old = values[-opts.window - 1]
                if old - current.value <= opts.ftol * max(abs(old), np.finfo(float).tiny):
                    reason = StopReason.CONVERGED
                    break

            direction = self.riemannian_gradient(x, current.gradient)
            slope = self.q_inner(direction, direction)
            if slope == 0.0:
                reason = self._final_reason(current)
                break

            if previous is not None:
                s = x - previous[0]
                y = direction - previous[1]
                sy = self.q_inner(s, y)
                if sy > 0:
                    step = self.q_inner(s, s) / sy

            # Armijo backtracking by halving
            accepted: tuple[np.ndarray, Evaluation] | None = None
            while step >= opts.min_step:
                trial = self.normalize(x - step * direction)
                evaluation = objective(trial)
                if (
                    evaluation is not None
                    and evaluation.value <= current.value - opts.armijo * step * slope
                ):
                    accepted = (trial, evaluation)
                    break
                step /= 2

            if accepted is None:
                reason = self._final_reason(current)
                logger.debug(f"Line search failed at iteration {iteration}")
                break

            previous = (x, direction)
            x, current = accepted
            iteration += 1
            values.append(current.value)
            history.append(IterationRecord(iteration, current.value, current.residual, step))
            logger.debug(
                f"iteration={iteration} value={current.value:.17g} "
                f"residual={current.residual:.3e} step={step:.3e}"
            )

        return DescentResult(
            x=x, evaluation=current, iterations=iteration, reason=reason, history=history
        )

    def _final_reason(self, current: Evaluation) -> StopReason:
        """Reason for a run that cannot make further progress."""
        if current.residual <= self.options.gtol:
            return StopReason.CONVERGED
        return StopReason.STALLED
