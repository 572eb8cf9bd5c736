"""Thread-pool helpers for independent restarts.

Results always come back in submission order, so aggregation does not depend
on scheduling.
"""

from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import logging
import os
from typing import TypeVar

from ..exceptions import ConfigurationError

# Get logger
logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

THREADS_ENVVAR = "NSH_THREADS"
"""Environment variable capping the worker threads."""

_DEFAULT_CAP = 8


@dataclass
class ThreadLimit:
    """Worker thread count resolved from the environment.

    Attributes:
        envvar: Environment variable holding a positive integer cap.
        default: Cap when the variable is unset; the CPU count also bounds it.
    """

    envvar: str = THREADS_ENVVAR
    """Environment variable holding the cap."""

    default: int = _DEFAULT_CAP
    """Cap when the variable is unset."""

    def resolve(self) -> int:
        """Get the worker count.

        Returns:
            The environment value when set, otherwise min(cpu count, default).

        Raises:
            ConfigurationError: If the environment value is not a positive integer.
        """
        raw = os.environ.get(self.envvar, "").strip()
        if raw:
            message = f"{self.envvar} must be a positive integer, got '{raw}'"
            try:
                threads = int(raw)
            except ValueError as e:
                raise ConfigurationError(message) from e
            if threads < 1:
                raise ConfigurationError(message)
            return threads
        return max(1, min(os.cpu_count() or 1, self.default))


def ordered_map(func: Callable[[T], R], items: Iterable[T], threads: int | None = None) -> list[R]:
    """Apply `func` to every item, possibly concurrently, keeping input order.

    Args:
        func: Pure function of one item.
        items: Work items.
        threads: Worker count, defaults to the environment-resolved limit.

    Returns:
        Results in the order of `items`.
    """
    work = list(items)
    workers = min(threads if threads is not None else ThreadLimit().resolve(), len(work))
    if workers <= 1:
        return [func(item) for item in work]
    logger.debug(f"Running {len(work)} tasks on {workers} threads")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, work))
