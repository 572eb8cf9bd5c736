"""Shared helpers for the CLI tests: entrypoint runner, field files and report schemas."""

from contextlib import redirect_stderr, redirect_stdout
from importlib.resources import files
import io
import json
import math
from pathlib import Path
import sys
from typing import Any
from unittest import mock

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

from nshridge import SpectralField, make_basis, make_domain
from nshridge.cli import entrypoint
from nshridge.utils.fieldio import write_field


def run_cli_entrypoint(argv: list[str] | None = None) -> tuple[str, str, int]:
    """Run the CLI entrypoint with the given argv-style arguments.

    This simulates running the CLI application from the command line in a way
    that allows tracking code coverage.

    Args:
        argv: Command line, first item the program name. Defaults to ["nshridge"].

    Returns:
        tuple: The captured stdout, stderr, and exit code.
    """
    if argv is None:
        argv = ["nshridge"]

    with mock.patch.object(sys, "argv", argv):
        stdout_io = io.StringIO()
        stderr_io = io.StringIO()
        exit_code = 0
        try:
            with redirect_stdout(stdout_io), redirect_stderr(stderr_io):
                entrypoint()
        except SystemExit as e:
            exit_code = int(e.code) if e.code is not None else 0

    return stdout_io.getvalue(), stderr_io.getvalue(), exit_code


def write_constant_field(path: Path, value: float, length: float = 4 * math.pi) -> Path:
    """Write the constant field `value` on a 1D box with 8 modes."""
    basis = make_basis(make_domain("box", [length]), modes=8)
    return write_field(SpectralField.constant(basis, value), path)


def _load_schemas() -> dict[str, dict[str, Any]]:
    schemas = {}
    for entry in (files("nshridge") / "schemas").iterdir():
        if entry.name.endswith(".schema.json"):
            schema = json.loads(entry.read_text(encoding="utf-8"))
            schemas[schema["$id"]] = schema
    return schemas


SCHEMAS = _load_schemas()
REGISTRY = Registry().with_resources(
    (uri, Resource.from_contents(schema)) for uri, schema in SCHEMAS.items()
)


def validate_report(data: Any, name: str) -> None:
    """Validate a report against `nshridge/schemas/<name>.schema.json`.

    Raises:
        jsonschema.ValidationError: If the report does not match.
    """
    schema = SCHEMAS[f"urn:nshridge:schema:{name}"]
    Draft202012Validator(schema, registry=REGISTRY).validate(data)
