"""Module for BasisInfo class."""

from dataclasses import dataclass, field
from typing import Any

from ..utils.formatters import TwoColumnFormatMixin


@dataclass
class BasisInfo(TwoColumnFormatMixin):
    """Information about a registered spectral basis.

    Attributes:
        name: Registry name, equal to the domain kind it discretizes
        description: Description lines of the basis
    """

    name: str
    description: list[str]
    _format_prefix: str = field(default="basis_", init=False)

    def __post_init__(self) -> None:
        """Ensure name and description are not empty."""
        if not self.name or not self.description:
            raise ValueError("Name and description cannot be empty")

    def to_dict(self) -> dict[str, Any]:
        """Convert the basis info to a dictionary.

        Returns:
            A dictionary representation of the basis info.
        """
        return {
            "name": self.name,
            "description": self.description,
        }
