"""Logging setup of the nshridge CLI.

The package logger and the `py.warnings` logger share one stderr handler, so
RuntimeWarnings raised by numpy or scipy inside a descent appear in the run log
with UTC timestamps instead of on bare stderr.
"""

import logging
import os
import sys
import time
from typing import TextIO

LOG_LEVEL_ENVVAR = "NSH_LOG_LEVEL"
DEFAULT_LEVEL = logging.ERROR
PACKAGE_LOGGER = "nshridge"
WARNINGS_LOGGER = "py.warnings"
LOG_FORMAT = "%(asctime)s.%(msecs)03dZ [%(levelname)s] %(name)s: %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%dT%H:%M:%S"

# -v, -vv, -vvv
_VERBOSITY_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def level_for_verbosity(verbose: int, quiet: bool = False) -> int | None:
    """Log level of the -q and -v flags; None leaves the choice to NSH_LOG_LEVEL."""
    if quiet:
        return logging.CRITICAL
    if verbose <= 0:
        return None
    return _VERBOSITY_LEVELS[min(verbose, len(_VERBOSITY_LEVELS)) - 1]


def _level_from_env() -> tuple[int | None, str | None]:
    """Level named by NSH_LOG_LEVEL as a name or number, and the rejected text if invalid."""
    text = os.environ.get(LOG_LEVEL_ENVVAR, "").strip().upper()
    if not text:
        return None, None
    if text.isdigit():
        return int(text), None
    level = logging.getLevelName(text)
    return (level, None) if isinstance(level, int) else (None, text)


def _stderr_handler(stream: TextIO | None = None) -> logging.Handler:
    handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    formatter = logging.Formatter(fmt=LOG_FORMAT, datefmt=LOG_DATE_FORMAT)
    formatter.converter = time.gmtime
    handler.setFormatter(formatter)
    return handler


def setup_cli_logging(log_level: int | None = None, stream: TextIO | None = None) -> None:
    """Configure the `nshridge` and `py.warnings` loggers for the CLI.

    The level is `log_level` when given, else NSH_LOG_LEVEL, else ERROR.
    Repeated setup replaces the handler.

    Args:
        log_level: Numeric log level override.
        stream: Destination of the log, stderr by default.
    """
    handler = _stderr_handler(stream)
    package_logger = logging.getLogger(PACKAGE_LOGGER)
    warnings_logger = logging.getLogger(WARNINGS_LOGGER)
    for target in (package_logger, warnings_logger):
        target.handlers.clear()
        target.addHandler(handler)
    warnings_logger.propagate = False

    rejected = None
    if log_level is None:
        log_level, rejected = _level_from_env()
    log_level = log_level or DEFAULT_LEVEL
    package_logger.setLevel(log_level)
    warnings_logger.setLevel(log_level)
    if rejected is not None:
        package_logger.error(
            f"Unknown {LOG_LEVEL_ENVVAR} '{rejected}', falling back to "
            f"{logging.getLevelName(DEFAULT_LEVEL)}"
        )

    # re-arm in case a previous setup's capture was undone by a warnings context
    logging.captureWarnings(False)
    logging.captureWarnings(True)

    # tracebacks only at DEBUG
    if log_level > logging.DEBUG:
        os.environ["_TYPER_STANDARD_TRACEBACK"] = "1"
        sys.tracebacklimit = 0
