"""Exact lattice utilities: transition matrices, lattice equality, incommensurability.

Entries are sympy expressions so that rationality is decided exactly: rationals
stay `Rational`, tagged irrationals such as `sqrt2` or `pi` stay symbolic.
Floating-point entries are rejected because their rationality is undecidable.
"""

from dataclasses import dataclass, field
import logging
import re
from typing import Any

import sympy
from sympy.parsing.sympy_parser import parse_expr

from .exceptions import RationalityError
from .utils.formatters import TwoColumnFormatMixin

# Get logger
logger = logging.getLogger(__name__)

# `sqrt2` is shorthand for `sqrt(2)`
_SQRT_SHORTHAND = re.compile(r"sqrt(\d+)")

_ALLOWED_NAMES: dict[str, Any] = {
    "sqrt": sympy.sqrt,
    "pi": sympy.pi,
    "Rational": sympy.Rational,
    "Integer": sympy.Integer,
}

PRESETS: dict[str, list[list[str]]] = {
    "square": [["1", "0"], ["0", "1"]],
    "hex": [["1", "1/2"], ["0", "sqrt3/2"]],
}
"""Generator matrices (rows; columns are generators) of the preset tori."""


def _parse(text: str) -> Any:
    """Parse text with only the allowed names; unknown names raise."""
    source = _SQRT_SHORTHAND.sub(r"sqrt(\1)", text.strip())
    names = set(re.findall(r"[A-Za-z_]\w*", source))
    unknown = names - set(_ALLOWED_NAMES)
    if unknown:
        raise RationalityError(f"Unknown names in exact expression: {', '.join(sorted(unknown))}")
    try:
        return parse_expr(source, local_dict=dict(_ALLOWED_NAMES), evaluate=True)
    except (SyntaxError, TypeError, ValueError, sympy.SympifyError) as e:
        raise RationalityError(f"Cannot parse exact expression '{text}'") from e


def _check_entry(entry: Any, text: str) -> sympy.Expr:
    entry = sympy.sympify(entry)
    if entry.atoms(sympy.Float):
        raise RationalityError(f"Floating entry '{text}' has undecidable rationality")
    if entry.free_symbols or not entry.is_number or entry.is_real is not True:
        raise RationalityError(f"Entry '{text}' is not an exact real number")
    return entry


def parse_exact(text: str) -> sympy.Expr:
    """Parse one exact real number such as `3/2`, `8*pi` or `sqrt2`.

    Raises:
        RationalityError: For floats, unknown names or non-real values.
    """
    return _check_entry(_parse(text), text)


def parse_exact_matrix(text: str | list[list[str]]) -> sympy.Matrix:
    """Parse a square matrix given as `[[a,b],[c,d]]` text or nested strings.

    Raises:
        RationalityError: For malformed input or inexact entries.
    """
    rows = _parse(text) if isinstance(text, str) else [[_parse(e) for e in row] for row in text]
    if not isinstance(rows, (list, tuple)) or not rows:
        raise RationalityError(f"Expected a nested list matrix, got '{text}'")
    if not all(isinstance(row, (list, tuple)) and len(row) == len(rows) for row in rows):
        raise RationalityError(f"Matrix '{text}' is not square")
    return sympy.Matrix([[_check_entry(e, str(e)) for e in row] for row in rows])


def is_rational_entry(entry: sympy.Expr) -> bool:
    """Decide the rationality of an exact entry.

    Raises:
        RationalityError: When sympy cannot decide.
    """
    rational = sympy.nsimplify(entry).is_rational if entry.is_rational is None else entry.is_rational
    if rational is None:
        raise RationalityError(f"Cannot decide whether {entry} is rational")
    return bool(rational)


def _require_nonsingular(M: sympy.Matrix) -> None:
    if not M.is_square or M.rows not in (1, 2, 3):
        raise RationalityError(f"Expected a square matrix of size 1 to 3, got {M.shape}")
    if sympy.simplify(M.det()) == 0:
        raise RationalityError("Matrix is singular")


def lattice_same(M: sympy.Matrix) -> bool:
    """True iff M and M⁻¹ both have integer entries, i.e. the lattices coincide.

    Raises:
        RationalityError: For singular matrices or irrational entries.
    """
    _require_nonsingular(M)
    if not all(is_rational_entry(entry) for entry in M):
        raise RationalityError("Same-lattice test needs rational entries")
    inverse = M.inv()
    return all(sympy.Rational(e).q == 1 for e in M) and all(
        sympy.Rational(e).q == 1 for e in inverse
    )


@dataclass
class DistinctnessVerdict(TwoColumnFormatMixin):
    """Irrational entries of a transition matrix.

    An irrational entry is a sufficient condition for two entire solutions to
    be essentially different; the condition over all orthogonal changes of
    coordinates is not decided.
    """

    irrational_entries: list[tuple[int, int, str]]
    _format_prefix: str = field(default="distinct_", init=False)

    @property
    def has_irrational(self) -> bool:
        """True when at least one entry is irrational."""
        return bool(self.irrational_entries)

    def to_dict(self) -> dict[str, Any]:
        """Convert the verdict to a JSON-ready dictionary."""
        return {
            "has_irrational": self.has_irrational,
            "irrational_entries": [
                {"row": i, "column": j, "value": value} for i, j, value in self.irrational_entries
            ],
            "sufficient_only": True,
        }


def distinctness_condition(M: sympy.Matrix) -> DistinctnessVerdict:
    """Report the irrational entries of a transition matrix.

    Raises:
        RationalityError: For singular matrices or undecidable entries.
    """
    _require_nonsingular(M)
    irrational = [
        (i, j, str(M[i, j]))
        for i in range(M.rows)
        for j in range(M.cols)
        if not is_rational_entry(M[i, j])
    ]
    return DistinctnessVerdict(irrational_entries=irrational)


def transition_matrix(H: sympy.Matrix, H2: sympy.Matrix) -> sympy.Matrix:
    """M with H2 = H·M for generator matrices whose columns are lattice vectors."""
    _require_nonsingular(H)
    _require_nonsingular(H2)
    return sympy.simplify(H.inv() * H2)


def rectangle_generators(aspect: str | sympy.Expr) -> sympy.Matrix:
    """Generators of the rectangle lattice with sides 1 and `aspect`."""
    a = parse_exact(aspect) if isinstance(aspect, str) else _check_entry(aspect, str(aspect))
    if not a.is_positive:
        raise RationalityError(f"Aspect ratio must be positive, got {a}")
    return sympy.Matrix([[1, 0], [0, a]])


@dataclass
class LatticeSpec:
    """Lattice generators with exact entries; columns are the generators."""

    generators: sympy.Matrix

    def __post_init__(self) -> None:
        """Validate the generator matrix."""
        _require_nonsingular(self.generators)

    @classmethod
    def parse(cls, text: str) -> "LatticeSpec":
        """Build from matrix text or a preset name (`hex`, `square`)."""
        if text in PRESETS:
            return cls(parse_exact_matrix(PRESETS[text]))
        return cls(parse_exact_matrix(text))

    def transition_to(self, other: "LatticeSpec") -> sympy.Matrix:
        """Transition matrix to another generator set."""
        return transition_matrix(self.generators, other.generators)

    def float_rows(self) -> list[list[float]]:
        """Rows of the generator matrix as floats."""
        return [[float(self.generators[i, j]) for j in range(self.generators.cols)]
                for i in range(self.generators.rows)]


@dataclass
class LatticeReport(TwoColumnFormatMixin):
    """Same-lattice and distinctness verdicts for one transition matrix."""

    matrix: sympy.Matrix
    same: bool | None
    """None when the matrix has irrational entries."""

    reason: str | None
    verdict: DistinctnessVerdict
    _format_prefix: str = field(default="lattice_", init=False)

    def to_dict(self) -> dict[str, Any]:
        """Convert the report to a JSON-ready dictionary."""
        return {
            "matrix": [[str(self.matrix[i, j]) for j in range(self.matrix.cols)]
                       for i in range(self.matrix.rows)],
            "determinant": str(sympy.simplify(self.matrix.det())),
            "lattice_same": self.same,
            "reason": self.reason,
            "distinctness": self.verdict.to_dict(),
        }


def lattice_report(M: sympy.Matrix) -> LatticeReport:
    """Run both lattice tests on a transition matrix."""
    verdict = distinctness_condition(M)
    if verdict.has_irrational:
        return LatticeReport(
            matrix=M,
            same=None,
            reason="irrational entries: same-lattice test needs rational entries",
            verdict=verdict,
        )
    return LatticeReport(matrix=M, same=lattice_same(M), reason=None, verdict=verdict)
