"""Core functionality for the nshridge library: basis registry and versioning."""

import inspect
import logging
from typing import TypeVar

from packaging.version import Version

from .bases.base import BaseBasis
from .bases.basis_info import BasisInfo
from .domain import DomainSpec
from .exceptions import ConfigurationError

# Map of basis names to basis classes
_BASES: dict[str, type[BaseBasis]] = {}

# Default truncation per dimension
_DEFAULT_MODES = {1: 32, 2: 32, 3: 16}

# Get logger
logger = logging.getLogger(__name__)

B = TypeVar("B", bound=BaseBasis)


def _normalize_basis_name(name: str) -> str:
    """Normalize a basis name.

    Args:
        name: Name of the basis to normalize

    Returns:
        Normalized basis name

    Raises:
        ValueError: If the name is not a valid identifier
    """
    name = name.lower()
    if not name.isidentifier():
        raise ValueError(f"Invalid basis name '{name}'. Must be a valid Python identifier.")
    return name


def register_basis(name: str, basis_class: type[B]) -> None:
    """Register a spectral basis class under the domain kind it discretizes.

    Args:
        name: Name to register the basis under
        basis_class: Basis class to register
    """
    # validate basis_class
    if not issubclass(basis_class, BaseBasis) or inspect.isabstract(basis_class):
        raise ValueError(
            f"Invalid basis class: {basis_class}. Must be a concrete subclass of BaseBasis."
        )

    # normalize name, check for duplicates, check for docstring
    name = _normalize_basis_name(name)
    if name in _BASES:
        raise ValueError(f"Basis '{name}' is already registered.")
    if not basis_class.__doc__:
        raise ValueError(f"Basis class '{basis_class.__name__}' must have a docstring.")
    _BASES[name] = basis_class


def get_basis(name: str) -> type[BaseBasis]:
    """Get a basis class by name.

    Args:
        name: Name of the basis to retrieve

    Returns:
        The basis class (not an instance)

    Raises:
        ValueError: If the requested basis is not found
    """
    name = _normalize_basis_name(name)
    try:
        return _BASES[name]
    except KeyError as e:
        raise ValueError(
            f"Basis '{name}' not found. Available bases: {', '.join(_BASES.keys())}"
        ) from e


def list_bases() -> list[BasisInfo]:
    """Get a list of all registered bases.

    Returns:
        A list of basis info objects having name and description
    """
    return [
        BasisInfo(
            name=name,
            description=[
                stripped_line
                for line in basis.__doc__.splitlines()  # type: ignore[union-attr]
                if (stripped_line := line.strip())
            ],
        )
        for name, basis in _BASES.items()
    ]


def default_modes(dimension: int) -> int:
    """Default truncation N for a spatial dimension."""
    try:
        return _DEFAULT_MODES[dimension]
    except KeyError as e:
        raise ConfigurationError(f"Unsupported dimension {dimension}") from e


def make_basis(domain: DomainSpec, modes: int | None = None, grid: int | None = None) -> BaseBasis:
    """Instantiate the registered basis for a domain.

    Args:
        domain: Domain to discretize.
        modes: Truncation N, defaults per dimension (32 up to 2D, 16 in 3D).
        grid: Collocation points per axis, defaults to the basis minimum rounded to a fast size.

    Returns:
        The basis instance.
    """
    basis_class = get_basis(domain.kind.value)
    if modes is None:
        modes = default_modes(domain.dimension)
    return basis_class(domain, modes, grid)


def library_version() -> Version:
    """Get the version of the nshridge library as a Version object.

    Returns:
        nshridge library version as a Version object.
    """
    # Dynamic version import
    from . import __version__

    return Version(__version__)
