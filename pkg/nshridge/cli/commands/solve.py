"""Ridge-Nehari solve with artifacts on disk."""

import logging

import typer
from typer import Typer

from ...exceptions import ConvergenceError
from ...utils.fieldio import write_field, write_pgm
from ...utils.parallel import ThreadLimit
from ..main import state
from ..utils.errors import exit_on_error
from ..utils.formatters import format_report, write_csv, write_json
from ..utils.options import (
    Alpha,
    Beta,
    Domain,
    EmitPgm,
    Ftol,
    Grid,
    Gtol,
    MaxIterations,
    Modes,
    Out,
    Seed,
    SobolevStarts,
    Starts,
    Stretch,
    Window,
    WithSobolev,
    build_config,
    envelope,
    make_problem,
)

# Get logger
logger = logging.getLogger(__name__)

ITERATION_COLUMNS = ("iteration", "value", "residual", "step")


def register_solve_commands(app: Typer) -> None:
    """Register the solve command with the main app."""
    app.command(name="solve")(cmd_solve)


@exit_on_error
def cmd_solve(
    alpha: Alpha = None,
    beta: Beta = None,
    domain: Domain = None,
    R: Stretch = None,
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
    emit_pgm: EmitPgm = False,
    with_sobolev: WithSobolev = True,
) -> None:
    """Minimize the energy over the ridge; writes field.csv, diagnostics.json, iterations.csv.

    Exit codes: 0 converged, 3 no ridge direction found, 4 not converged.
    """
    config = build_config(
        alpha=alpha,
        beta=beta,
        domain=domain,
        R=R,
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
        emit_pgm=emit_pgm or None,
    )
    threads = ThreadLimit().resolve()
    problem = make_problem(config)
    if with_sobolev:
        problem.sobolev(config.sobolev_starts, config.seed, config.sobolev_options(), threads)
    result = problem.solve(config.solver_options(threads))

    config.out.mkdir(parents=True, exist_ok=True)
    paths = {
        "field": write_field(result.U, config.out / "field.csv"),
        "diagnostics": write_json(
            config.out / "diagnostics.json", envelope("solve", config, result.to_dict())
        ),
        "iterations": write_csv(
            config.out / "iterations.csv",
            [record.to_dict() for record in result.history],
            ITERATION_COLUMNS,
        ),
    }
    if config.emit_pgm:
        paths["pgm"] = write_pgm(result.U, config.out / "field.pgm")
    logger.info(f"Wrote {', '.join(str(path) for path in paths.values())}")

    summary = {
        "energy": result.energy,
        "converged": result.converged,
        "certified": result.certified,
        "H_value": result.H_value,
        "gradient_residual": result.gradient_residual,
        "strong_residual": result.strong_residual,
        "best_start": result.best_start,
        "iterations": result.iterations,
        "inequalities_passed": result.inequalities.passed,
        "irreducible": result.diagnostics.irreducible,
        "files": {name: str(path) for name, path in paths.items()},
    }
    typer.echo(format_report(summary, state.format, prefix="solve_"))
    if not result.converged:
        raise ConvergenceError(
            f"No start converged; best residual {result.gradient_residual:.3e} > gtol {config.gtol}"
        )
