"""Exceptions for the nshridge package."""


class NshError(Exception):
    """Base class for all nshridge errors.

    The class attribute `exit_code` is the process exit code the command line
    interface uses when the error reaches it.
    """

    exit_code: int = 1


class ConfigurationError(NshError, ValueError):
    """Exception raised for invalid parameters, domains, tolerances or input files."""

    exit_code = 2


class NoRidgeError(NshError):
    """Exception raised when no trial direction has a non-monotonous fibration."""

    exit_code = 3

    def __init__(self, msg: str = "Nehari manifold empty at this resolution") -> None:
        """Initialize the NoRidgeError with a message."""
        super().__init__(msg)


class ConvergenceError(NshError):
    """Exception raised when the best ridge minimization run did not converge."""

    exit_code = 4


class FibrationError(NshError, ValueError):
    """Exception raised when an operation needs a fibration it was not given."""

    exit_code = 2


class RationalityError(NshError, ValueError):
    """Exception raised when the rationality of a lattice entry cannot be decided."""

    exit_code = 2
