"""Tests for CLI main and global options."""

from pathlib import Path
import subprocess
import sys
from tempfile import TemporaryDirectory
import unittest
from unittest import mock

from typer.testing import CliRunner

from nshridge.cli import app

from .helpers import run_cli_entrypoint

runner = CliRunner()

LATTICE = ["lattice", "--matrix", "[[1,0],[0,1]]"]


class TestMainModule(unittest.TestCase):
    """Test cases for the main module of nshridge."""

    def test_main_module_subproc_run(self):
        """Test that the main module can be run as a script."""
        pkg_dir = Path(__file__).parent.parent.parent
        result = subprocess.run(
            [sys.executable, "-m", "nshridge", "--help"],
            cwd=str(pkg_dir),
            capture_output=True,
            text=True,
            encoding="utf-8",
            timeout=60,
        )
        self.assertEqual(result.returncode, 0)
        self.assertRegex(result.stdout, r"Usage:(.|\n)+--config(.|\n)+--version(.|\n)+solve")

    def test_help_option(self):
        """Test that --help lists every command."""
        result = runner.invoke(app, ["--help"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("Usage:", result.stdout)
        for command in ("constants", "fibration", "solve", "sweep", "tile", "lattice", "verify"):
            with self.subTest(command=command):
                self.assertIn(command, result.stdout)

    def test_version_option(self):
        """Test --version outputs the version and exits."""
        from nshridge import __version__ as version_string

        result = runner.invoke(app, ["--version"])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.stdout, f"nshridge {version_string}\n")

    def test_format_json_option(self):
        """Test --format json outputs a JSON object."""
        result = runner.invoke(app, ["--format=json", *LATTICE])
        self.assertEqual(result.exit_code, 0)
        stripped_output = result.stdout.strip()
        self.assertTrue(stripped_output.startswith("{"))
        self.assertTrue(stripped_output.endswith("}"))

    def test_format_text_option(self):
        """Test --format text outputs two columns."""
        result = runner.invoke(app, ["--format=text", *LATTICE])
        self.assertEqual(result.exit_code, 0)
        self.assertRegex(result.stdout, r"(?m)^command:\s+lattice$")
        self.assertRegex(result.stdout, r"(?m)^result\.lattice_same:\s+True$")

    def test_verbose_option(self):
        """Test -vv shows INFO logs and the default shows none."""
        result_default = runner.invoke(app, LATTICE)
        result_info = runner.invoke(app, ["-vv", *LATTICE])
        self.assertEqual(result_default.exit_code, 0)
        self.assertEqual(result_info.exit_code, 0)
        self.assertNotIn("INFO", result_default.stderr)
        self.assertIn("INFO", result_info.stderr)
        self.assertNotIn("DEBUG", result_info.stderr)

    def test_quiet_option(self):
        """Test --quiet suppresses the error log of a failing command."""
        result = runner.invoke(app, ["--quiet", "lattice"])
        self.assertEqual(result.exit_code, 2)
        self.assertFalse(result.stderr)

    def test_config_file(self):
        """Test values from --config are used and flags override them."""
        with TemporaryDirectory() as temp_dir:
            config = Path(temp_dir) / "run.toml"
            config.write_text(
                'alpha = -1.0\nbeta = 2.5\ndomain = "box:4*pi"\nmodes = 8\n', encoding="utf-8"
            )
            result = runner.invoke(
                app,
                ["--config", str(config), "--format=json", "constants", "--no-sobolev", "--beta=3"],
            )
        self.assertEqual(result.exit_code, 0)
        self.assertIn('"beta": 3.0', result.stdout)
        self.assertIn('"domain": "box:4*pi"', result.stdout)

    def test_bad_config_file(self):
        """Test unknown keys in --config exit with the configuration code."""
        with TemporaryDirectory() as temp_dir:
            config = Path(temp_dir) / "run.toml"
            config.write_text("alpha = -1.0\nspeed = 3\n", encoding="utf-8")
            result = runner.invoke(app, ["--config", str(config), *LATTICE])
        self.assertEqual(result.exit_code, 2)
        self.assertIn("Unknown configuration keys: speed", result.stderr)

    def test_mistyped_config_value(self):
        """Test a wrongly typed --config value exits with the configuration code."""
        with TemporaryDirectory() as temp_dir:
            config = Path(temp_dir) / "run.toml"
            config.write_text('alpha = -1.0\nbeta = 2.5\ngtol = "x"\n', encoding="utf-8")
            result = runner.invoke(app, ["--config", str(config), "constants", "--no-sobolev"])
        self.assertEqual(result.exit_code, 2)
        self.assertIn("gtol must be a number", result.stderr)

    def test_bad_option(self):
        """Test that an invalid option raises an error."""
        result = runner.invoke(app, ["--invalid-option"])
        self.assertNotEqual(result.exit_code, 0)
        self.assertIn("No such option", result.stderr)

    def test_bad_command(self):
        """Test that an invalid command raises an error."""
        result = runner.invoke(app, ["invalid-command"])
        self.assertNotEqual(result.exit_code, 0)
        self.assertIn("No such command", result.stderr)

    def test_configuration_error_exit_code(self):
        """Test the entrypoint exits with code 2 for invalid settings."""
        stdout, stderr, exit_code = run_cli_entrypoint(
            ["nshridge", "constants", "--alpha=-1", "--no-sobolev"]
        )
        self.assertEqual(exit_code, 2)
        self.assertEqual(stdout, "")
        self.assertIn("Both alpha and beta are required", stderr)

    def test_internal_exception_gets_logged(self):
        """Test that an internal exception gets logged as critical."""
        with (
            mock.patch(
                "nshridge.cli.commands.lattice.lattice_report",
                side_effect=RuntimeError("invalid internal state"),
            ),
            self.assertLogs(logger=None, level="CRITICAL") as log,
        ):
            stdout, stderr, exit_code = run_cli_entrypoint(["nshridge", *LATTICE])

        self.assertEqual(exit_code, 1)
        self.assertEqual(len(log.records), 1)
        self.assertEqual(log.records[0].levelname, "CRITICAL")
        self.assertIn("invalid internal state", log.output[0])
        self.assertNotIn("Traceback", stdout)
        self.assertNotIn("Traceback", stderr)

    def test_internal_exception_gets_logged_and_rethrown(self):
        """Test that an internal exception with debug log gets logged and rethrown."""
        with (
            mock.patch(
                "nshridge.cli.commands.lattice.lattice_report",
                side_effect=RuntimeError("invalid internal state"),
            ),
            self.assertRaises(RuntimeError) as context,
            self.assertLogs(logger=None, level="CRITICAL") as log,
        ):
            run_cli_entrypoint(["nshridge", "-vvv", *LATTICE])

        self.assertEqual(len(log.records), 1)
        self.assertIn("invalid internal state", str(context.exception))
