"""Custom types for inequality slacks and checks."""

from dataclasses import dataclass, field
import math
from typing import Any

from .formatters import SIGNIFICANT_DIGITS, TwoColumnFormatMixin


class Slack(float):
    """Measured slack of an inequality, lhs − rhs for `lhs ≥ rhs`.

    Nonnegative slack means the inequality holds. String formatting supports the
    standard Python format spec and appends a pass/fail marker. The default is
    ".17g".
    """

    # idiomatic way to prevent a __dict__ on immutable subclasses
    __slots__ = ()

    def __new__(cls, value: float) -> "Slack":
        """Create a new Slack instance."""
        return float.__new__(cls, value)

    def __format__(self, format_spec: str) -> str:
        """Format the slack with a ' (pass)' or ' (fail)' suffix.

        Args:
            format_spec: The format specification for the float value.
                Defaults to ".17g".

        Returns:
            A formatted string representing the slack.
        """
        # Default format spec if none provided
        if not format_spec:
            format_spec = f".{SIGNIFICANT_DIGITS}g"

        marker = "pass" if self >= 0 else "fail"
        return f"{super().__format__(format_spec)} ({marker})"


@dataclass
class InequalityCheck(TwoColumnFormatMixin):
    """A checked inequality `lhs ≥ rhs` with its relative tolerance.

    Attributes:
        name: Identifier of the inequality.
        lhs: Measured left-hand side.
        rhs: Measured right-hand side.
        tolerance: Allowed violation relative to `scale`.
        scale: Magnitude the tolerance is relative to.
        informational: True when the check is reported without deciding pass/fail.
    """

    name: str
    """Identifier of the inequality."""

    lhs: float
    """Measured left-hand side."""

    rhs: float
    """Measured right-hand side."""

    tolerance: float = 1e-10
    """Allowed violation relative to `scale`."""

    scale: float = 1.0
    """Magnitude the tolerance is relative to."""

    informational: bool = False
    """True when the check is reported without deciding pass/fail."""

    _format_prefix: str = field(default="", init=False)

    def __post_init__(self) -> None:
        """Validate the tolerance and scale."""
        if self.tolerance < 0 or self.scale < 0:
            raise ValueError("Tolerance and scale must be nonnegative")

    @property
    def slack(self) -> Slack:
        """Slack lhs − rhs."""
        return Slack(self.lhs - self.rhs)

    @property
    def passed(self) -> bool:
        """True when the slack is above −tolerance·scale."""
        slack = float(self.slack)
        return math.isfinite(slack) and slack >= -self.tolerance * max(self.scale, 0.0)

    def to_dict(self) -> dict[str, Any]:
        """Convert the check to a JSON-ready dictionary."""
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": float(self.slack),
            "passed": self.passed,
            "informational": self.informational,
        }


def upper_bound(
    name: str, value: float, bound: float, tolerance: float = 1e-10, informational: bool = False
) -> InequalityCheck:
    """Check `value ≤ bound`, stored as `bound ≥ value`."""
    return InequalityCheck(
        name=name,
        lhs=bound,
        rhs=value,
        tolerance=tolerance,
        scale=max(abs(bound), abs(value)),
        informational=informational,
    )


def lower_bound(
    name: str, value: float, bound: float, tolerance: float = 1e-10, informational: bool = False
) -> InequalityCheck:
    """Check `value ≥ bound`."""
    return InequalityCheck(
        name=name,
        lhs=value,
        rhs=bound,
        tolerance=tolerance,
        scale=max(abs(bound), abs(value)),
        informational=informational,
    )
