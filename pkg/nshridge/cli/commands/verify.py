"""Re-check an existing solution against the ridge inequalities."""

import logging
from pathlib import Path
from typing import Annotated

import typer
from typer import Typer

from ...functionals import gradient_residual
from ...spectral import strong_residual
from ...utils.fieldio import read_field
from ..main import state
from ..utils.errors import exit_on_error
from ..utils.formatters import format_report
from ..utils.options import (
    Alpha,
    Beta,
    Seed,
    SobolevStarts,
    WithSobolev,
    build_config,
    envelope,
    make_problem,
)

# Get logger
logger = logging.getLogger(__name__)


def register_verify_commands(app: Typer) -> None:
    """Register the verify command with the main app."""
    app.command(name="verify")(cmd_verify)


@exit_on_error
def cmd_verify(
    field: Annotated[
        Path,
        typer.Argument(help="Field file in the nsh-field format", exists=True, dir_okay=False),
    ],
    alpha: Alpha = None,
    beta: Beta = None,
    seed: Seed = None,
    sobolev_starts: SobolevStarts = None,
    with_sobolev: WithSobolev = True,
) -> None:
    """Run the inequality suite on a field; exits 1 when an applicable check fails."""
    config = build_config(alpha=alpha, beta=beta, seed=seed, sobolev_starts=sobolev_starts)
    U = read_field(field)
    problem = make_problem(config, U)
    if with_sobolev:
        problem.sobolev(config.sobolev_starts, config.seed, config.sobolev_options())
    report = problem.verify(U)

    result = {
        "field": str(field),
        "passed": report.passed,
        "gradient_residual": gradient_residual(U, problem.params),
        "strong_residual": strong_residual(U, problem.params),
        "inequalities": report.to_dict(),
    }
    typer.echo(format_report(envelope("verify", config, result), state.format))
    if not report.passed:
        logger.error("Inequality suite failed")
        raise typer.Exit(code=1)
