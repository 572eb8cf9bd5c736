"""Command line interface for nshridge."""

import logging
from pathlib import Path
from typing import Annotated, Any

import typer

from .. import __version__ as version_string
from ..config import load_config
from ..exceptions import NshError
from .utils.logger import level_for_verbosity, setup_cli_logging
from .utils.output_format import OutputFormat

# Get logger
logger = logging.getLogger(__name__)


class CliState:
    """State for the command line interface."""

    def __init__(self) -> None:
        """Initialize the CLI state with default values."""
        self.format: OutputFormat = OutputFormat.TEXT
        self.quiet: bool = False
        self.config_path: Path | None = None
        self.config_values: dict[str, Any] = {}


# state container instance
state: CliState = CliState()

#########################
#### Global Commands ####
#########################

# Define the Typer app
app = typer.Typer(
    no_args_is_help=True,
    add_completion=False,
    pretty_exceptions_show_locals=False,
)


def entrypoint() -> None:
    """Entry point for the CLI application.

    Library errors exit with their own code. Other exceptions are logged as
    critical; at DEBUG level they are re-raised to show the traceback.
    SystemExit() is a sibling of Exception and is not caught here, allowing it to propagate normally.
    """
    try:
        app()
    except NshError as ex:
        logger.error(str(ex))
        exit(ex.exit_code)
    except Exception as ex:
        # Log the exception as critical since the application will not continue
        logger.critical(str(ex))

        # If the log level is DEBUG, raise the exception to show the traceback
        if logger.getEffectiveLevel() <= logging.DEBUG:
            raise

        exit(1)


@app.callback(invoke_without_command=True)
def global_options(
    config: Annotated[
        Path | None,
        typer.Option(
            "--config",
            "-c",
            help="TOML file of run settings; command line flags override its values",
            rich_help_panel="Global Options",
            show_default=False,
        ),
    ] = None,
    format: Annotated[
        OutputFormat,
        typer.Option(
            "--format",
            "-f",
            help="Output format",
            rich_help_panel="Global Options",
            show_default=True,
            case_sensitive=False,
        ),
    ] = OutputFormat.TEXT,
    quiet: Annotated[
        bool,
        typer.Option(
            "--quiet",
            "-q",
            help="Suppress all stderr output except critical/fatal failures",
            rich_help_panel="Global Options",
        ),
    ] = False,
    verbose: Annotated[
        int,
        typer.Option(
            "--verbose",
            "-v",
            count=True,
            show_default=False,
            metavar="",
            help="Increase stderr output verbosity (can be repeated for higher levels)",
            rich_help_panel="Global Options",
        ),
    ] = 0,
    version: Annotated[
        bool,
        typer.Option(
            "--version",
            help="Show version and exit",
            rich_help_panel="Global Options",
        ),
    ] = False,
) -> None:
    """nshridge - ridge-Nehari solutions of the Swift–Hohenberg equation."""
    global state
    state.format = format
    state.quiet = quiet
    state.config_path = config

    # -q, then -v count, then NSH_LOG_LEVEL, then ERROR
    setup_cli_logging(log_level=level_for_verbosity(verbose, quiet))

    if version:
        typer.echo(f"nshridge {version_string}")
        raise typer.Exit()

    state.config_values = {}
    if config is not None:
        try:
            state.config_values = load_config(config)
        except NshError as e:
            logger.error(str(e))
            raise typer.Exit(code=e.exit_code) from e
