"""Fibration analysis of a supplied field."""

import logging
from pathlib import Path
from typing import Annotated

import typer
from typer import Typer

from ...functionals import coercivity_check, energy_lower_bound, fibration_classify
from ...utils.fieldio import read_field
from ..main import state
from ..utils.errors import exit_on_error
from ..utils.formatters import format_report
from ..utils.options import Alpha, Beta, build_config, envelope

# Get logger
logger = logging.getLogger(__name__)


def register_fibration_commands(app: Typer) -> None:
    """Register the fibration command with the main app."""
    app.command(name="fibration")(cmd_fibration)


@exit_on_error
def cmd_fibration(
    field: Annotated[
        Path,
        typer.Argument(help="Field file in the nsh-field format", exists=True, dir_okay=False),
    ],
    alpha: Alpha = None,
    beta: Beta = None,
) -> None:
    """Classify the fibration t ↦ E[tv] of a field and check its coercivity."""
    config = build_config(alpha=alpha, beta=beta)
    p = config.params()
    v = read_field(field)
    logger.info(f"Fibration of {field} on a {v.domain.kind} with N={v.modes}")

    data = fibration_classify(v, p)
    result = {
        "field": str(field),
        "fibration": data.to_dict(),
        "coercivity": coercivity_check(v, p).to_dict(),
        "energy_lower_bound": energy_lower_bound(v, p).to_dict(),
    }
    typer.echo(format_report(envelope("fibration", config, result), state.format))
