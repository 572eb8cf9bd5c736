"""nshridge - ridge-Nehari solutions of the stationary Swift–Hohenberg equation.

The library discretizes the equation spectrally on sliding-wall boxes and
skew-periodic tori, minimizes the energy over the ridge of the Nehari
manifold, and checks the minimizer against the ridge inequalities.
"""

from .core import default_modes, get_basis, library_version, list_bases, make_basis, register_basis
from .domain import DomainKind, DomainSpec, make_domain
from .exceptions import (
    ConfigurationError,
    ConvergenceError,
    FibrationError,
    NoRidgeError,
    NshError,
    RationalityError,
)
from .field import SpectralField
from .params import Params

# Dynamic version import
__version__: str
try:
    from importlib.metadata import version as _version

    __version__ = _version("nshridge")
except (ImportError, ModuleNotFoundError):
    # Fallback for development environments where the library package itself is not installed
    __version__ = "0.1.0.dev0"


# Dynamically import all basis modules which leads to them being registered
def _import_bases() -> None:
    """Import all basis modules from the bases directory."""
    import importlib
    import pathlib
    import pkgutil

    bases_dir = pathlib.Path(__file__).parent / "bases"
    for module_info in pkgutil.iter_modules([str(bases_dir)]):
        if module_info.name not in ["__init__", "base", "basis_info"]:
            importlib.import_module(f".{module_info.name}", package="nshridge.bases")


# Run dynamic imports
_import_bases()

# Clean namespace
del _import_bases

from .model import SwiftHohenberg  # noqa: E402

# module names that are exposed to wildcard imports `from nshridge import *`
__all__ = [
    "__version__",
    "ConfigurationError",
    "ConvergenceError",
    "DomainKind",
    "DomainSpec",
    "FibrationError",
    "NoRidgeError",
    "NshError",
    "Params",
    "RationalityError",
    "SpectralField",
    "SwiftHohenberg",
    "default_modes",
    "get_basis",
    "library_version",
    "list_bases",
    "make_basis",
    "make_domain",
    "register_basis",
]
