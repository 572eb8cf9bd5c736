"""Conversion of library errors into process exit codes."""

from collections.abc import Callable
import functools
import logging
from typing import ParamSpec, TypeVar

import typer

from ...exceptions import NshError

# Get logger
logger = logging.getLogger(__name__)

P = ParamSpec("P")
T = TypeVar("T")


def exit_on_error(func: Callable[P, T]) -> Callable[P, T]:
    """Log an NshError raised by a command and exit with its code."""

    @functools.wraps(func)
    def wrapper(*args: P.args, **kwargs: P.kwargs) -> T:
        try:
            return func(*args, **kwargs)
        except NshError as e:
            logger.error(str(e))
            raise typer.Exit(code=e.exit_code) from e

    return wrapper
