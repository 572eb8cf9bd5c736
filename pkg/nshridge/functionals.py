"""Energy functional, Nehari functionals and closed-form fibration analysis.

For a field v the fibration φ(t) = E[tv] is the quartic

    φ(t) = Q t²/2 − B t³/3 + D t⁴/4,   Q = Q[v], B = β∫v³, D = ∫v⁴,

so every functional along a ray is a polynomial in t and the critical points of
φ follow from the quadratic Q − Bt + Dt² = 0.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
import logging
import math
from typing import Any

import numpy as np

from .exceptions import FibrationError
from .field import SpectralField
from .params import Params
from .spectral import quadratic_form_Q
from .utils.formatters import TwoColumnFormatMixin
from .utils.quantities import InequalityCheck, lower_bound

# Get logger
logger = logging.getLogger(__name__)

# Relative discriminant below which a fibration is reported degenerate
DEGENERATE_TOLERANCE = 1e-12


class FibrationClass(str, Enum):
    """Shape of the fibration t ↦ E[tv] on t > 0."""

    # idiomatic way to prevent a __dict__ on immutable subclasses
    __slots__ = ()

    MONOTONOUS = "monotonous"
    """No critical point for t > 0"""

    DEGENERATE = "degenerate"
    """One double critical point"""

    NON_MONOTONOUS = "non-monotonous"
    """A local maximum t1 (ridge) and a local minimum t2 (valley)"""

    def __format__(self, format_spec: str) -> str:
        """Format the enum value for display.

        Args:
            format_spec: Format specification string

        Returns:
            The enum value as a string.
        """
        return format(self.value, format_spec)


def moments(u: SpectralField, p: Params) -> tuple[float, float, float]:
    """Return (Q[u], ∫u³, ∫u⁴) from one grid evaluation."""
    values = u.values
    squared = values**2
    return (
        quadratic_form_Q(u, p),
        u.basis.integral(squared * values),
        u.basis.integral(squared * squared),
    )


def energy_E(u: SpectralField, p: Params) -> float:
    """E[u] = ∫[½(Δu+u)² − ½αu² − ⅓βu³ + ¼u⁴] = Q/2 − β∫u³/3 + ∫u⁴/4."""
    q, b0, d = moments(u, p)
    return q / 2 - p.beta * b0 / 3 + d / 4


def functional_L(u: SpectralField, p: Params) -> float:
    """L[u] = dE[u]u = Q − β∫u³ + ∫u⁴."""
    q, b0, d = moments(u, p)
    return q - p.beta * b0 + d


def functional_H(u: SpectralField, p: Params) -> float:
    """H[u] = dL[u]u = 2Q − 3β∫u³ + 4∫u⁴."""
    q, b0, d = moments(u, p)
    return 2 * q - 3 * p.beta * b0 + 4 * d


def functional_K0(u: SpectralField, p: Params) -> float:
    """K₀[u] = E − L/2 = (β/6)∫u³ − ¼∫u⁴."""
    _, b0, d = moments(u, p)
    return p.beta * b0 / 6 - d / 4


def functional_K1(u: SpectralField, p: Params) -> float:
    """K₁[u] = L − H/2 = (β/2)∫u³ − ∫u⁴."""
    _, b0, d = moments(u, p)
    return p.beta * b0 / 2 - d


def gradient_coeffs(u: SpectralField, p: Params) -> np.ndarray:
    """Coefficient gradient ((μ−1)² − α)c + P(−βu² + u³) of E at u."""
    values = u.values
    nonlinear = u.basis.forward(values**2 * (values - p.beta))
    return u.basis.eigen.symbol(p.alpha) * u.coeffs + nonlinear


def gradient_dE(u: SpectralField, p: Params) -> SpectralField:
    """Riesz representer of dE[u] in the coefficient space.

    dE[u]h equals the coefficient inner product of the result with h for every
    band-limited h.
    """
    return SpectralField(u.basis, gradient_coeffs(u, p))


def gradient_residual(u: SpectralField, p: Params) -> float:
    """‖dE[u]‖_* / ‖u‖_Q, the dual-norm size of the gradient relative to u."""
    q = quadratic_form_Q(u, p)
    if q == 0:
        return 0.0
    g = gradient_coeffs(u, p)
    dual = u.basis.inner(g, g / u.basis.eigen.symbol(p.alpha))
    return math.sqrt(max(dual, 0.0) / q)


def f_of_s(s: float) -> float:
    """f(s) = (1 + 3w)/(1 + w)³ with w = √(1 − s⁻²), defined for s ≥ 1.

    w is evaluated as √((s−1)(s+1))/s, which keeps f(1) = 1 exact. f decreases
    from 1 at s = 1 to ½ as s → ∞.
    """
    if not s >= 1.0:
        raise FibrationError(f"f(s) is defined for s >= 1, got {s}")
    if math.isinf(s):
        return 0.5
    w = math.sqrt((s - 1.0) * (s + 1.0)) / s
    return (1.0 + 3.0 * w) / (1.0 + w) ** 3


@dataclass
class FibrationData(TwoColumnFormatMixin):
    """Closed-form analysis of the fibration t ↦ E[tv].

    The moments refer to the sign-normalized direction: when ∫v³ < 0 the field
    is flipped first and `sign` records it. Directions with ∫v³ = 0 count as
    monotonous.

    Attributes:
        Q: Q[v] > 0.
        B0: ∫v³ after sign normalization, ≥ 0.
        D: ∫v⁴ > 0.
        beta: Quadratic coefficient β.
        sign: +1, or −1 when v was flipped.
    """

    Q: float
    """Q[v]."""

    B0: float
    """∫v³ of the sign-normalized direction."""

    D: float
    """∫v⁴."""

    beta: float
    """Quadratic coefficient β."""

    sign: int = 1
    """−1 when the direction was flipped to make ∫v³ ≥ 0."""

    classification: FibrationClass = field(init=False)
    """Monotonous, degenerate or non-monotonous."""

    t1: float | None = field(default=None, init=False)
    """Smaller critical scaling (ridge), when it exists."""

    t2: float | None = field(default=None, init=False)
    """Larger critical scaling (valley), when it exists."""

    _format_prefix: str = field(default="fibration_", init=False)

    def __post_init__(self) -> None:
        """Normalize the sign and classify."""
        if not (self.Q > 0 and self.D > 0) or not all(
            math.isfinite(x) for x in (self.Q, self.B0, self.D)
        ):
            raise FibrationError("Fibration of the zero field is undefined")
        if self.B0 < 0:
            self.B0 = -self.B0
            self.sign = -self.sign

        b = self.B
        discriminant = b * b - 4 * self.Q * self.D
        relative = discriminant / (b * b + 4 * self.Q * self.D)
        if self.B0 == 0 or (relative < -DEGENERATE_TOLERANCE):
            self.classification = FibrationClass.MONOTONOUS
        elif abs(relative) <= DEGENERATE_TOLERANCE:
            self.classification = FibrationClass.DEGENERATE
            self.t1 = self.t2 = b / (2 * self.D)
        else:
            self.classification = FibrationClass.NON_MONOTONOUS
            root = math.sqrt(discriminant)
            # 2Q/(B+√Δ) equals (B−√Δ)/(2D) without cancellation
            self.t1 = 2 * self.Q / (b + root)
            self.t2 = (b + root) / (2 * self.D)

    @classmethod
    def from_qbd(cls, Q: float, B: float, D: float, beta: float = 1.0) -> "FibrationData":
        """Build from Q, B = β∫v³ and D."""
        return cls(Q=Q, B0=B / beta, D=D, beta=beta)

    @property
    def B(self) -> float:
        """β∫v³."""
        return self.beta * self.B0

    @property
    def ridge_t(self) -> float | None:
        """Scaling t̃ onto the ridge (the minus-sign root)."""
        return self.t1

    @property
    def I(self) -> float:  # noqa: E743
        """∫v³/(Q∫v⁴)^{1/2} of the sign-normalized direction."""
        return self.B0 / math.sqrt(self.Q * self.D)

    @property
    def s(self) -> float:
        """βI/2."""
        return self.beta * self.I / 2

    @property
    def f_s(self) -> float | None:
        """f(s) when s ≥ 1."""
        return f_of_s(self.s) if self.s >= 1.0 else None

    @property
    def on_ridge_side(self) -> bool:
        """True when a ridge point exists."""
        return self.classification is not FibrationClass.MONOTONOUS

    def energy(self, t: float) -> float:
        """φ(t) = E[tv]."""
        return self.Q * t**2 / 2 - self.B * t**3 / 3 + self.D * t**4 / 4

    def L(self, t: float) -> float:
        """L[tv] = tφ′(t)."""
        return self.Q * t**2 - self.B * t**3 + self.D * t**4

    def H(self, t: float) -> float:
        """H[tv] = t²φ″(t) + tφ′(t)."""
        return 2 * self.Q * t**2 - 3 * self.B * t**3 + 4 * self.D * t**4

    def K0(self, t: float) -> float:
        """K₀[tv]."""
        return self.B * t**3 / 6 - self.D * t**4 / 4

    def K1(self, t: float) -> float:
        """K₁[tv]."""
        return self.B * t**3 / 2 - self.D * t**4

    @property
    def ridge_energy(self) -> float | None:
        """E[t̃v] evaluated on the quartic."""
        return self.energy(self.t1) if self.t1 is not None else None

    @property
    def ridge_energy_formula(self) -> float | None:
        """Q³/(3β²(∫v³)²)·f(βI/2)."""
        f_s = self.f_s
        if f_s is None or not self.on_ridge_side:
            return None
        return self.Q**3 / (3 * self.beta**2 * self.B0**2) * f_s

    @property
    def signs_verified(self) -> bool:
        """H[t1 v] < 0 < H[t2 v] for non-monotonous fibrations."""
        if self.classification is not FibrationClass.NON_MONOTONOUS:
            return True
        return self.H(self.t1) < 0 < self.H(self.t2)  # type: ignore[arg-type]

    def ray_coercivity(self, scalings: Sequence[float], name: str) -> InequalityCheck:
        """Worst sample of E[s·v] ≥ Q[s·v]/12 over nonzero scalings s.

        Samples are compared by slack relative to Q[s·v], so small scalings do
        not dominate; s = 0 holds with equality and is skipped.
        """
        worst: InequalityCheck | None = None
        for scaling in scalings:
            s = float(scaling)
            if s == 0.0:
                continue
            q = self.Q * s**2
            check = InequalityCheck(
                name=name, lhs=self.energy(s), rhs=q / 12, tolerance=1e-12, scale=q
            )
            if worst is None or check.slack / q < worst.slack / worst.scale:
                worst = check
        if worst is None:
            raise FibrationError("Coercivity needs at least one nonzero scaling")
        return worst

    def coercivity_checks(self, samples: int = 10) -> list[InequalityCheck]:
        """Coercivity inequalities of the fibration.

        Monotonous: E[v] ≥ Q[v]/18. Otherwise E[t·t̃v] ≥ Q[t·t̃v]/12 sampled on
        t = 1/samples, 2/samples, ..., 1; the worst sample is reported.
        """
        if self.classification is FibrationClass.MONOTONOUS:
            return [
                InequalityCheck(
                    name="monotonous_E_over_Q18",
                    lhs=self.energy(1.0),
                    rhs=self.Q / 18,
                    tolerance=1e-12,
                    scale=self.Q,
                )
            ]
        ts = np.linspace(0.0, 1.0, samples + 1)[1:]
        return [self.ray_coercivity(ts * self.t1, "ridge_E_over_Q12")]  # type: ignore[operator]

    def to_dict(self) -> dict[str, Any]:
        """Convert the fibration data to a flat JSON-ready dictionary."""
        return {
            "Q": self.Q,
            "B0": self.B0,
            "D": self.D,
            "B": self.B,
            "sign": self.sign,
            "classification": self.classification.value,
            "t1": self.t1,
            "t2": self.t2,
            "ridge_t": self.ridge_t,
            "I": self.I,
            "s": self.s,
            "f_s": self.f_s,
            "E_ridge": self.ridge_energy,
            "E_formula": self.ridge_energy_formula,
            "H_t1": self.H(self.t1) if self.t1 is not None else None,
            "H_t2": self.H(self.t2) if self.t2 is not None else None,
            "signs_verified": self.signs_verified,
        }


def fibration_classify(v: SpectralField, p: Params) -> FibrationData:
    """Classify the fibration of a nonzero field.

    Raises:
        FibrationError: For the zero field.
    """
    if v.is_zero():
        raise FibrationError("Fibration of the zero field is undefined")
    q, b0, d = moments(v, p)
    data = FibrationData(Q=q, B0=b0, D=d, beta=p.beta)
    if not data.signs_verified:
        logger.warning(f"Ridge/valley sign conditions failed for {data.to_dict()}")
    return data


def functional_I(v: SpectralField, p: Params) -> float:
    """I[v] = ∫v³/(Q[v]∫v⁴)^{1/2}, odd under v ↦ −v.

    Raises:
        FibrationError: For the zero field.
    """
    if v.is_zero():
        raise FibrationError("I[v] of the zero field is undefined")
    q, b0, d = moments(v, p)
    return b0 / math.sqrt(q * d)


def ridge_energy_formula(v: SpectralField, p: Params) -> tuple[float, float]:
    """Ridge scaling and energy from the homogeneous closed form.

    Returns:
        Tuple (t̃, E[t̃v]); t̃ carries the sign that makes ∫(t̃v)³ > 0.

    Raises:
        FibrationError: If the fibration has no ridge point.
    """
    data = fibration_classify(v, p)
    energy = data.ridge_energy_formula
    if energy is None or data.t1 is None:
        raise FibrationError(f"Fibration is {data.classification}, no ridge point")
    return data.sign * data.t1, energy


@dataclass
class CoercivityReport(TwoColumnFormatMixin):
    """Result of the coercivity inequalities for one direction."""

    classification: FibrationClass
    """Fibration class of the direction."""

    checks: list[InequalityCheck]
    """Inequalities with measured slack."""

    _format_prefix: str = field(default="coercivity_", init=False)

    @property
    def passed(self) -> bool:
        """True when every check passed."""
        return all(check.passed for check in self.checks)

    def to_dict(self) -> dict[str, Any]:
        """Convert the report to a JSON-ready dictionary."""
        return {
            "classification": self.classification.value,
            "passed": self.passed,
            "checks": {check.name: check.to_dict() for check in self.checks},
        }


def coercivity_check(v: SpectralField, p: Params) -> CoercivityReport:
    """Check E[v] ≥ Q/18 (monotonous) or E[tU] ≥ Q[tU]/12 on the ridge ray."""
    data = fibration_classify(v, p)
    return CoercivityReport(classification=data.classification, checks=data.coercivity_checks())


def energy_lower_bound(u: SpectralField, p: Params) -> InequalityCheck:
    """E[u] ≥ ½Q[u] − |Ω|β⁴/12, from ¼u⁴ − ⅓βu³ ≥ −β⁴/12 pointwise."""
    q = quadratic_form_Q(u, p)
    bound = q / 2 - u.domain.volume * p.beta**4 / 12
    return lower_bound("energy_coercive", energy_E(u, p), bound)
