"""Exact lattice checks: same lattice and incommensurability."""

import logging
from typing import Annotated

import typer
from typer import Typer

from ...exceptions import ConfigurationError
from ...lattice import LatticeSpec, lattice_report, parse_exact_matrix, rectangle_generators
from ..main import state
from ..utils.errors import exit_on_error
from ..utils.formatters import format_report
from ..utils.options import envelope

# Get logger
logger = logging.getLogger(__name__)


def register_lattice_commands(app: Typer) -> None:
    """Register the lattice command with the main app."""
    app.command(name="lattice")(cmd_lattice)


@exit_on_error
def cmd_lattice(
    matrix: Annotated[
        str | None,
        typer.Option(
            "--matrix", help="Transition matrix, e.g. '[[3/2,0],[0,1]]' or '[[sqrt2,0],[0,1]]'"
        ),
    ] = None,
    from_: Annotated[
        str | None,
        typer.Option("--from", help="First generator matrix (columns) or preset hex/square"),
    ] = None,
    to: Annotated[
        str | None,
        typer.Option("--to", help="Second generator matrix (columns) or preset hex/square"),
    ] = None,
    aspect: Annotated[
        list[str] | None,
        typer.Option("--aspect", help="Aspect ratios of two rectangles, given twice"),
    ] = None,
) -> None:
    """Decide whether a transition matrix preserves the lattice or has irrational entries."""
    given = [matrix is not None, from_ is not None or to is not None, aspect is not None]
    if sum(given) != 1:
        raise ConfigurationError("Give exactly one of --matrix, --from/--to, or --aspect twice")
    if matrix is not None:
        M = parse_exact_matrix(matrix)
    elif aspect is not None:
        if len(aspect) != 2:
            raise ConfigurationError(f"--aspect needs two values, got {len(aspect)}")
        first, second = (LatticeSpec(rectangle_generators(a)) for a in aspect)
        M = first.transition_to(second)
    else:
        if from_ is None or to is None:
            raise ConfigurationError("--from and --to must be given together")
        M = LatticeSpec.parse(from_).transition_to(LatticeSpec.parse(to))

    report = lattice_report(M)
    logger.info(f"Transition matrix {report.to_dict()['matrix']}")
    typer.echo(format_report(envelope("lattice", None, report.to_dict()), state.format))
