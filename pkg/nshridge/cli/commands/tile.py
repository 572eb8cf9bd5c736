"""Entire solutions by even reflection of a box solution."""

import logging
from pathlib import Path
from typing import Annotated

import typer
from typer import Typer

from ...tiling import reflect_extend, tiling_report
from ...utils.fieldio import read_field, write_field
from ..main import state
from ..utils.errors import exit_on_error
from ..utils.formatters import format_report, write_json
from ..utils.options import Alpha, Beta, Counts, Out, build_config, envelope

# Get logger
logger = logging.getLogger(__name__)


def register_tile_commands(app: Typer) -> None:
    """Register the tile command with the main app."""
    app.command(name="tile")(cmd_tile)


@exit_on_error
def cmd_tile(
    field: Annotated[
        Path,
        typer.Argument(help="Box field file in the nsh-field format", exists=True, dir_okay=False),
    ],
    alpha: Alpha = None,
    beta: Beta = None,
    counts: Counts = None,
    out: Out = None,
) -> None:
    """Reflect a box solution; writes cell.csv, periodic.csv and tiling.json."""
    config = build_config(alpha=alpha, beta=beta, counts=counts, out=out)
    p = config.params()
    U = read_field(field)
    tiling = reflect_extend(U, config.tile_counts(U.domain.dimension))
    logger.info(f"Reflecting {field} into {tiling.copies} copies")
    report = tiling_report(tiling, p)

    periodic_domain = tiling.periodic.domain
    result = {
        "field": str(field),
        "report": report.to_dict(),
        "cell_domain": tiling.cell.domain.to_dict(),
        "periodic_domain": periodic_domain.to_dict(),
        "lattice": {"generators": periodic_domain.scaled_matrix.tolist()},
    }
    config.out.mkdir(parents=True, exist_ok=True)
    write_field(tiling.cell, config.out / "cell.csv")
    write_field(tiling.periodic, config.out / "periodic.csv")
    write_json(config.out / "tiling.json", envelope("tile", config, result))
    typer.echo(format_report(report.to_dict(), state.format, prefix="tiling_"))
