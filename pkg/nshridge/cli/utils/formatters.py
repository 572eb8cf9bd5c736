"""Report rendering for stdout and the artifact files."""

from collections.abc import Mapping, Sequence
import csv
import json
import math
from pathlib import Path
from typing import Any

from ...utils.formatters import SIGNIFICANT_DIGITS, pretty_print_two_columns
from .output_format import OutputFormat


def _json_ready(value: Any) -> Any:
    """Replace non-finite floats, which JSON cannot carry, by None."""
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, Mapping):
        return {str(k): _json_ready(v) for k, v in value.items()}
    if isinstance(value, Sequence) and not isinstance(value, str):
        return [_json_ready(v) for v in value]
    return value


def to_json(data: Mapping[str, Any]) -> str:
    """Serialize a report; floats keep their shortest round-trip representation."""
    return json.dumps(_json_ready(data), indent=2, sort_keys=True, allow_nan=False)


def format_report(data: Mapping[str, Any], fmt: OutputFormat, prefix: str = "") -> str:
    """Render a report dictionary as two text columns or JSON.

    Args:
        data: JSON-ready report.
        fmt: Output format.
        prefix: Label prefix for text output.

    Returns:
        The rendered report.
    """
    if fmt == OutputFormat.TEXT:
        return pretty_print_two_columns(_Report(data), prefix)
    if fmt == OutputFormat.JSON:
        return to_json(data)
    raise ValueError(f"Unsupported output format: {fmt}")


class _Report:
    """Adapter giving a plain dictionary the `to_dict()` protocol."""

    def __init__(self, data: Mapping[str, Any]) -> None:
        self._data = data

    def to_dict(self) -> Mapping[str, Any]:
        return self._data


def write_json(path: Path, data: Mapping[str, Any]) -> Path:
    """Write a report as JSON with a trailing newline."""
    path.write_text(to_json(data) + "\n", encoding="utf-8")
    return path


def _csv_value(value: Any) -> Any:
    if isinstance(value, float):
        return format(value, f".{SIGNIFICANT_DIGITS}g")
    if value is None:
        return ""
    return value


def write_csv(path: Path, rows: Sequence[Mapping[str, Any]], fieldnames: Sequence[str]) -> Path:
    """Write rows as CSV with floats at 17 significant digits.

    Args:
        path: Target file.
        rows: One mapping per row; missing keys are left empty.
        fieldnames: Column order.

    Returns:
        The path written.
    """
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.DictWriter(
            f,
            fieldnames=list(fieldnames),
            restval="",
            extrasaction="ignore",
            dialect="unix",
            lineterminator="\n",
        )
        writer.writeheader()
        for row in rows:
            writer.writerow({key: _csv_value(value) for key, value in row.items()})
    return path
