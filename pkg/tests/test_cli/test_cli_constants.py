"""Tests for the constants command."""

import json
import unittest

from typer.testing import CliRunner

from nshridge.cli import app

from .helpers import validate_report

runner = CliRunner()

BASE = ["--alpha=-1", "--beta=3", "--domain=box:4*pi", "--modes=8"]


class TestCliConstants(unittest.TestCase):
    """Test cases for the constants command."""

    def test_constant_solutions(self):
        """Test c₋ and c₊ are the roots of (1−α) − βc + c²."""
        result = runner.invoke(app, ["--format=json", "constants", *BASE, "--no-sobolev"])
        self.assertEqual(result.exit_code, 0, result.stderr)
        data = json.loads(result.stdout)
        validate_report(data, "constants")
        constants = data["result"]["constant_solutions"]
        self.assertAlmostEqual(constants["c_minus"], 1.0)
        self.assertAlmostEqual(constants["c_plus"], 2.0)
        self.assertNotIn("sobolev", data["result"])
        self.assertAlmostEqual(data["result"]["norm_equivalence"]["C"], 2.0)

    def test_sobolev_constants(self):
        """Test the Sobolev section and β₀ are reported."""
        result = runner.invoke(
            app, ["--format=json", "constants", *BASE, "--sobolev-starts=1", "--seed=3"]
        )
        self.assertEqual(result.exit_code, 0, result.stderr)
        data = json.loads(result.stdout)
        validate_report(data, "constants")
        report = data["result"]
        self.assertGreater(report["beta0"], 0.0)
        self.assertAlmostEqual(report["beta_nehari_empty"], 2 * report["sobolev"]["S2"])

    def test_text_output(self):
        """Test text output uses dotted labels."""
        result = runner.invoke(app, ["constants", *BASE, "--no-sobolev"])
        self.assertEqual(result.exit_code, 0)
        self.assertRegex(result.stdout, r"(?m)^result\.constant_solutions\.c_plus:\s+2")

    def test_no_constant_solutions(self):
        """Test β ≤ 2√(1−α) exits with the configuration code."""
        result = runner.invoke(
            app, ["constants", "--alpha=-1", "--beta=2", "--modes=8", "--no-sobolev"]
        )
        self.assertEqual(result.exit_code, 2)
        self.assertIn("No constant solutions", result.stderr)

    def test_invalid_parameters(self):
        """Test α ≥ 0 and invalid domains exit before any compute."""
        for args in (["--alpha=0.5", "--beta=3"], ["--alpha=-1", "--beta=3", "--domain=ball:3"]):
            with self.subTest(args=args):
                result = runner.invoke(app, ["constants", *args, "--no-sobolev"])
                self.assertEqual(result.exit_code, 2)
