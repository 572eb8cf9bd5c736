"""Tests for the verify command."""

import json
from pathlib import Path
from tempfile import TemporaryDirectory
import unittest

from typer.testing import CliRunner

from nshridge.cli import app

from .helpers import validate_report, write_constant_field

runner = CliRunner()


class TestCliVerify(unittest.TestCase):
    """Test cases for the verify command."""

    def setUp(self):
        """Write the constant solution c₋ = 1 to a temporary file."""
        self._tmp = TemporaryDirectory()
        self.field = write_constant_field(Path(self._tmp.name) / "U.csv", 1.0)

    def tearDown(self):
        """Remove the temporary directory."""
        self._tmp.cleanup()

    def test_constant_solution(self):
        """Test a constant solution has zero residuals and the exit code follows the suite."""
        result = runner.invoke(
            app,
            ["--format=json", "verify", str(self.field), "--alpha=-1", "--beta=3", "--no-sobolev"],
        )
        data = json.loads(result.stdout)
        validate_report(data, "verify")
        report = data["result"]
        self.assertEqual(result.exit_code, 0 if report["passed"] else 1)
        self.assertLess(report["strong_residual"], 1e-10)
        self.assertLess(report["gradient_residual"], 1e-10)
        checks = report["inequalities"]["checks"]
        self.assertTrue(checks["nehari_L_relative"]["passed"])
        self.assertNotIn("L4_separation", checks)

    def test_with_sobolev(self):
        """Test the Sobolev checks are added when the constants are estimated."""
        result = runner.invoke(
            app,
            ["--format=json", "verify", str(self.field), "--alpha=-1", "--beta=3"]
            + ["--sobolev-starts=1"],
        )
        self.assertIn(result.exit_code, (0, 1))
        checks = json.loads(result.stdout)["result"]["inequalities"]["checks"]
        self.assertIn("L4_separation", checks)
        self.assertIn("end_of_ridge_energy", checks)

    def test_missing_parameters(self):
        """Test missing β exits with code 2."""
        result = runner.invoke(app, ["verify", str(self.field), "--alpha=-1", "--no-sobolev"])
        self.assertEqual(result.exit_code, 2)
