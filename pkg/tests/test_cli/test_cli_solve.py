"""Tests for the solve command."""

import csv
import json
from pathlib import Path
from tempfile import TemporaryDirectory
import unittest

from typer.testing import CliRunner

from nshridge.cli import app
from nshridge.utils.fieldio import read_field

from .helpers import validate_report

runner = CliRunner()

SMALL = [
    "--alpha=-1",
    "--beta=3",
    "--domain=box:4*pi",
    "--modes=8",
    "--starts=2",
    "--max-iterations=2000",
    "--gtol=1e-7",
]


class TestCliSolve(unittest.TestCase):
    """Test cases for the solve command."""

    def setUp(self):
        """Create a temporary output directory."""
        self._tmp = TemporaryDirectory()
        self.out = Path(self._tmp.name) / "run"

    def tearDown(self):
        """Remove the temporary directory."""
        self._tmp.cleanup()

    def test_solve_writes_artifacts(self):
        """Test the field, diagnostics, iteration log and raster are written."""
        result = runner.invoke(
            app,
            ["--format=json", "solve", *SMALL, "--no-sobolev", "--emit-pgm", "-o", str(self.out)],
        )
        self.assertIn(result.exit_code, (0, 4), result.stderr)
        summary = json.loads(result.stdout)
        self.assertEqual(result.exit_code == 0, summary["converged"])

        diagnostics = json.loads((self.out / "diagnostics.json").read_text(encoding="utf-8"))
        validate_report(diagnostics, "diagnostics")
        self.assertEqual(len(diagnostics["result"]["starts"]), 2)
        self.assertAlmostEqual(diagnostics["result"]["energy"], summary["energy"])

        U = read_field(self.out / "field.csv")
        self.assertEqual(U.modes, 8)
        with open(self.out / "iterations.csv", encoding="utf-8", newline="") as f:
            reader = csv.DictReader(f)
            self.assertEqual(reader.fieldnames, ["iteration", "value", "residual", "step"])
            self.assertGreater(len(list(reader)), 0)
        self.assertTrue((self.out / "field.pgm").read_bytes().startswith(b"P5\n"))

    def test_invalid_tolerance_writes_nothing(self):
        """Test invalid settings exit with code 2 before creating the output directory."""
        args = ["solve", *SMALL, "--gtol=-1", "--no-sobolev", "-o", str(self.out)]
        result = runner.invoke(app, args)
        self.assertEqual(result.exit_code, 2)
        self.assertFalse(self.out.exists())
