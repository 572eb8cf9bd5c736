"""Pretty formatters used in class __format__ methods."""

from collections.abc import Mapping, Sequence
from enum import Enum
import logging
import math
from typing import Any

# Get logger
logger = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 17


def format_number(value: Any) -> str:
    """Format a scalar for text output, floats with 17 significant digits.

    Args:
        value: Scalar to format.

    Returns:
        The formatted scalar.
    """
    if isinstance(value, Enum):
        return format(value)
    if isinstance(value, bool) or value is None:
        return str(value)
    if isinstance(value, float):
        # float subclasses carry their own presentation
        if type(value) is not float:
            return format(value)
        if not math.isfinite(value):
            return str(value)
        return f"{value:.{SIGNIFICANT_DIGITS}g}"
    return str(value)


def _flatten_fields(data: Mapping[str, Any], prefix: str = "") -> tuple[list[tuple[str, Any]], int]:
    """Flatten a nested mapping into a list of (field_label, value) and find max width.

    Args:
        data: The mapping to flatten, usually the output of a record's `to_dict()`.
        prefix: Prefix to prepend to field names. Nested mappings extend it with their key.

    Returns:
        Tuple:
            1. list of (field_label, value) pairs
            2. maximum width of all field labels
    """
    fields = []
    max_width = 0

    for name, value in data.items():
        if value is None or name.startswith("_"):
            continue
        # Recurse for nested records
        if isinstance(value, Mapping):
            logger.debug(f"Flatten nested: {name} prefix={prefix}{name}.")
            nested_fields, nested_width = _flatten_fields(value, f"{prefix}{name}.")
            fields.extend(nested_fields)
            max_width = max(max_width, nested_width)
            continue
        field_label = f"{prefix}{name}:"
        max_width = max(max_width, len(field_label))
        fields.append((field_label, value))
    return fields, max_width


def pretty_print_two_columns(obj: object, prefix: str) -> str:
    """Pretty print a record with a `to_dict()` method in two aligned columns.

    Args:
        obj: The record to format.
        prefix: Prefix to prepend to field names.

    Returns:
        A formatted string representing the object in two columns.
    """
    data = obj.to_dict() if hasattr(obj, "to_dict") else dict(vars(obj))
    fields, field_width = _flatten_fields(data, prefix)
    lines = []
    for field_label, value in fields:
        # Normalize value to sequence for multi-line values
        if isinstance(value, str) or not isinstance(value, Sequence):
            value = [value]
        elif not value:
            value = ["[]"]

        # Handle single-line and multi-line values
        rendered = [
            ", ".join(format_number(v) for v in item)
            if isinstance(item, Sequence) and not isinstance(item, str)
            else format_number(item)
            for item in value
        ]
        lines.append(f"{field_label:<{field_width}} {rendered[0]}")
        for line in rendered[1:]:
            lines.append(" " * field_width + f" {line}")

    # Return the formatted string with each line separated by a newline
    return "\n".join(lines)


class TwoColumnFormatMixin:
    """Mixin to provide a __format__ method for two-column formatting."""

    def __format__(self, format_spec: str) -> str:
        """Format the object as a two-column string.

        Args:
            format_spec: Format specification string.

        Returns:
            A formatted string representing the object.
        """
        prefix = getattr(self, "_format_prefix", "")
        return format(pretty_print_two_columns(self, prefix), format_spec)
