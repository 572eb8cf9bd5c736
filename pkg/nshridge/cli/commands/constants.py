"""Constant solutions, Sobolev constants and thresholds."""

import logging
from typing import Annotated

import typer
from typer import Typer

from ...spectral import norm_equivalence_constants
from ..main import state
from ..utils.errors import exit_on_error
from ..utils.formatters import format_report
from ..utils.options import (
    Alpha,
    Beta,
    Domain,
    Grid,
    Modes,
    Seed,
    SobolevStarts,
    Stretch,
    Sweep,
    WithSobolev,
    build_config,
    envelope,
    make_problem,
)

# Get logger
logger = logging.getLogger(__name__)


def register_constants_commands(app: Typer) -> None:
    """Register the constants command with the main app."""
    app.command(name="constants")(cmd_constants)


@exit_on_error
def cmd_constants(
    alpha: Alpha = None,
    beta: Beta = None,
    domain: Domain = None,
    R: Stretch = None,
    modes: Modes = None,
    grid: Grid = None,
    seed: Seed = None,
    sobolev_starts: SobolevStarts = None,
    sweep: Sweep = None,
    with_sobolev: WithSobolev = True,
    with_thresholds: Annotated[
        bool,
        typer.Option("--thresholds", help="Estimate β* over the stretch sweep"),
    ] = False,
) -> None:
    """Report c₋, c₊, S₂, S₃, S₄ and the existence thresholds in β."""
    config = build_config(
        alpha=alpha,
        beta=beta,
        domain=domain,
        R=R,
        modes=modes,
        grid=grid,
        seed=seed,
        sobolev_starts=sobolev_starts,
        sweep=sweep,
    )
    problem = make_problem(config)
    logger.info(f"Constants for α={config.alpha} β={config.beta} on {config.domain}")

    lower, upper = norm_equivalence_constants(problem.basis, problem.params)
    result = {
        "params": problem.params.to_dict(),
        "domain": problem.domain.to_dict(),
        "modes": problem.basis.modes,
        "grid": problem.basis.grid,
        "constant_solutions": problem.constants().to_dict(),
        "norm_equivalence": {"c": lower, "C": upper},
    }
    if with_sobolev or with_thresholds:
        sobolev = problem.sobolev(config.sobolev_starts, config.seed, config.sobolev_options())
        result["sobolev"] = sobolev.to_dict()
        result["beta0"] = sobolev.beta0
        result["beta_nehari_empty"] = 2.0 * sobolev.S2.value
    if with_thresholds:
        result["thresholds"] = problem.thresholds(
            config.sweep_values(),
            config.sobolev_starts,
            config.seed,
            config.sobolev_options(),
        ).to_dict()

    typer.echo(format_report(envelope("constants", config, result), state.format))
