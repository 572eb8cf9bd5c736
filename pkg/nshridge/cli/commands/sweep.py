"""Stretch sweep of the ridge solve for the irreducibility trend."""

import logging
from typing import Any

import typer
from typer import Typer

from ...equilibria import constant_solutions
from ...exceptions import NoRidgeError, NshError
from ...model import SwiftHohenberg
from ...nehari import SolverOptions
from ...utils.parallel import ThreadLimit
from ..main import state
from ..utils.errors import exit_on_error
from ..utils.formatters import format_report, write_csv
from ..utils.options import (
    Alpha,
    Beta,
    Domain,
    Ftol,
    Grid,
    Gtol,
    MaxIterations,
    Modes,
    Out,
    Seed,
    SobolevStarts,
    Starts,
    Sweep,
    Window,
    WithSobolev,
    build_config,
    make_problem,
)

# Get logger
logger = logging.getLogger(__name__)


def register_sweep_commands(app: Typer) -> None:
    """Register the sweep command with the main app."""
    app.command(name="sweep")(cmd_sweep)


def _sweep_row(
    problem: SwiftHohenberg, R: float, options: SolverOptions, sobolev: tuple[Any, ...] | None
) -> dict[str, Any]:
    """Solve at one stretch factor; failures become a status instead of an exception."""
    p = problem.params
    row: dict[str, Any] = {"R": R, "volume": problem.domain.volume}
    if p.beta > p.beta_min_constants:
        row["E_c_minus"] = constant_solutions(p, problem.domain).E_minus
    try:
        bump = problem.bump()
        row["bump_energy"] = bump.energy
        row["bump_I"] = bump.I
        if sobolev is not None:
            row["S2"], row["S3"], row["S4"] = problem.sobolev(*sobolev).values
        result = problem.solve(options)
    except NoRidgeError:
        row["status"] = "no-ridge"
        return row
    except NshError as e:
        logger.warning(f"Sweep R={R} failed: {e}")
        row["status"] = "error"
        row["message"] = str(e)
        return row

    row["status"] = "converged" if result.converged else "not-converged"
    row["energy"] = result.energy
    row["gradient_residual"] = result.gradient_residual
    row["iterations"] = result.iterations
    row["below_bump"] = result.diagnostics.below_bump
    row["below_constant"] = result.diagnostics.below_constant
    row["irreducible"] = result.diagnostics.irreducible
    for axis, value in enumerate(result.diagnostics.axis_dependence):
        row[f"axis_dependence_{axis + 1}"] = value
    return row


@exit_on_error
def cmd_sweep(
    alpha: Alpha = None,
    beta: Beta = None,
    domain: Domain = None,
    sweep: Sweep = None,
    modes: Modes = None,
    grid: Grid = None,
    starts: Starts = None,
    seed: Seed = None,
    max_iterations: MaxIterations = None,
    gtol: Gtol = None,
    ftol: Ftol = None,
    window: Window = None,
    sobolev_starts: SobolevStarts = None,
    out: Out = None,
    with_sobolev: WithSobolev = False,
) -> None:
    """Solve for each stretch factor R and write one row per R to sweep.csv."""
    config = build_config(
        alpha=alpha,
        beta=beta,
        domain=domain,
        sweep=sweep,
        modes=modes,
        grid=grid,
        starts=starts,
        seed=seed,
        max_iterations=max_iterations,
        gtol=gtol,
        ftol=ftol,
        window=window,
        sobolev_starts=sobolev_starts,
        out=out,
    )
    threads = ThreadLimit().resolve()
    options = config.solver_options(threads)
    sobolev = (
        (config.sobolev_starts, config.seed, config.sobolev_options(), threads)
        if with_sobolev
        else None
    )
    base = make_problem(config)

    rows = []
    for R in config.sweep_values():
        problem = base.stretched(R)
        rows.append(_sweep_row(problem, R, options, sobolev))
        logger.info(f"Sweep R={R}: {rows[-1]['status']} energy={rows[-1].get('energy')}")

    n = base.domain.dimension
    columns = [
        "R",
        "status",
        "energy",
        "E_c_minus",
        "bump_energy",
        "bump_I",
        "below_bump",
        "below_constant",
        "irreducible",
        *[f"axis_dependence_{axis + 1}" for axis in range(n)],
        "S2",
        "S3",
        "S4",
        "gradient_residual",
        "iterations",
        "volume",
        "message",
    ]
    config.out.mkdir(parents=True, exist_ok=True)
    path = write_csv(config.out / "sweep.csv", rows, columns)

    energies = [row["energy"] for row in rows if "energy" in row]
    summary = {
        "rows": len(rows),
        "statuses": [row["status"] for row in rows],
        "max_energy": max(energies) if energies else None,
        "file": str(path),
    }
    typer.echo(format_report(summary, state.format, prefix="sweep_"))
