"""Command options shared by the subcommands and their merge into a RunConfig."""

from pathlib import Path
from typing import Annotated, Any

import typer

from ... import __version__
from ...config import RunConfig
from ...field import SpectralField
from ...model import SwiftHohenberg
from ..main import state

Alpha = Annotated[
    float | None, typer.Option("--alpha", help="Linear coefficient α < 0", show_default=False)
]
Beta = Annotated[
    float | None, typer.Option("--beta", help="Quadratic coefficient β > 0", show_default=False)
]
Domain = Annotated[
    str | None,
    typer.Option(
        "--domain",
        help="box:L1[,L2[,L3]], torus:[[..]], torus:hex or torus:square; e.g. box:8*pi,8*pi",
        show_default=False,
    ),
]
Stretch = Annotated[
    str | None, typer.Option("--R", help="Stretch factor R ≥ 1, e.g. 2 or 3/2", show_default=False)
]
Modes = Annotated[
    int | None, typer.Option("--modes", "-N", help="Modes per axis", show_default=False)
]
Grid = Annotated[
    int | None, typer.Option("--grid", "-M", help="Grid points per axis", show_default=False)
]
Starts = Annotated[
    int | None, typer.Option("--starts", help="Ridge multistart directions", show_default=False)
]
Seed = Annotated[int | None, typer.Option("--seed", help="Random seed", show_default=False)]
MaxIterations = Annotated[
    int | None,
    typer.Option("--max-iterations", help="Iteration budget per start", show_default=False),
]
Gtol = Annotated[
    float | None, typer.Option("--gtol", help="Gradient residual threshold", show_default=False)
]
Ftol = Annotated[
    float | None,
    typer.Option("--ftol", help="Relative decrease threshold over the window", show_default=False),
]
Window = Annotated[
    int | None, typer.Option("--window", help="Stopping window in iterations", show_default=False)
]
SobolevStarts = Annotated[
    int | None,
    typer.Option("--sobolev-starts", help="Random starts per Sobolev search", show_default=False),
]
Sweep = Annotated[
    list[str] | None,
    typer.Option("--sweep", help="Stretch factor of the sweep (repeatable)", show_default=False),
]
Counts = Annotated[
    list[int] | None,
    typer.Option("--counts", help="Reflected copies per axis (one value or one per axis)"),
]
Out = Annotated[
    Path | None, typer.Option("--out", "-o", help="Output directory", show_default=False)
]
EmitPgm = Annotated[bool, typer.Option("--emit-pgm", help="Also write field.pgm")]
WithSobolev = Annotated[
    bool,
    typer.Option("--sobolev/--no-sobolev", help="Estimate S₂, S₃, S₄ for the Sobolev checks"),
]


def build_config(require_params: bool = True, **flags: Any) -> RunConfig:
    """Merge the --config file with flags and validate before any compute.

    Raises:
        ConfigurationError: For unknown keys or invalid settings.
    """
    config = RunConfig.from_sources(state.config_values, **flags)
    return config.validate(require_params=require_params)


def envelope(command: str, config: RunConfig | None, result: dict[str, Any]) -> dict[str, Any]:
    """Report wrapper carrying the command, tool version and the echoed configuration."""
    return {
        "command": command,
        "version": __version__,
        "config": config.to_dict() if config is not None else None,
        "result": result,
    }


def make_problem(config: RunConfig, field: SpectralField | None = None) -> SwiftHohenberg:
    """Problem on the configured domain, or on the domain and discretization of `field`."""
    p = config.params()
    if field is not None:
        return SwiftHohenberg(p.alpha, p.beta, field.domain, field.modes, field.basis.grid)
    return SwiftHohenberg(p.alpha, p.beta, config.domain_spec(), config.modes, config.grid)
