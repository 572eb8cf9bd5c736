"""CLI command registry."""

import typer

from .constants import register_constants_commands
from .fibration import register_fibration_commands
from .lattice import register_lattice_commands
from .solve import register_solve_commands
from .sweep import register_sweep_commands
from .tile import register_tile_commands
from .verify import register_verify_commands


def register_commands(app: typer.Typer) -> None:
    """Register all CLI commands with the main app."""
    register_constants_commands(app)
    register_fibration_commands(app)
    register_solve_commands(app)
    register_sweep_commands(app)
    register_tile_commands(app)
    register_lattice_commands(app)
    register_verify_commands(app)


__all__ = ["register_commands"]
