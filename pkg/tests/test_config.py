"""Tests for run configuration."""

import math
from pathlib import Path
from tempfile import TemporaryDirectory
import unittest

from nshridge import ConfigurationError, DomainKind
from nshridge.config import RunConfig, load_config, parse_domain


class TestParseDomain(unittest.TestCase):
    """Test cases for domain text."""

    def test_box_with_expressions(self):
        """Test box lengths given as exact expressions."""
        domain = parse_domain("box:8*pi,4*pi", R=2.0)
        self.assertIs(domain.kind, DomainKind.BOX)
        self.assertAlmostEqual(domain.lengths[0], 8 * math.pi)
        self.assertEqual(domain.stretch, 2.0)

    def test_torus_presets_and_matrix(self):
        """Test torus presets and explicit generator matrices."""
        hexagonal = parse_domain("torus:hex")
        self.assertAlmostEqual(hexagonal.volume, math.sqrt(3) / 2)
        square = parse_domain("torus:[[2, 0], [0, 3]]")
        self.assertAlmostEqual(square.volume, 6.0)

    def test_invalid(self):
        """Test malformed domain text."""
        for text in ("box", "box:", "sphere:1", "box:1.5x", "torus:[[1, 2], [2, 4]]", "box:-1"):
            with self.subTest(text=text), self.assertRaises(ConfigurationError):
                parse_domain(text)


class TestRunConfig(unittest.TestCase):
    """Test cases for RunConfig."""

    def test_defaults(self):
        """Test the default settings validate without parameters."""
        config = RunConfig().validate(require_params=False)
        self.assertEqual(config.starts, 12)
        self.assertEqual(config.sweep_values(), [1.0, 2.0, 4.0, 8.0])
        self.assertAlmostEqual(config.domain_spec().volume, 64 * math.pi**2)

    def test_flags_override_file(self):
        """Test flag values win over file values and None flags do not override."""
        config = RunConfig.from_sources({"alpha": -1.0, "beta": 2.0, "starts": 4}, beta=3.0, starts=None)
        self.assertEqual(config.beta, 3.0)
        self.assertEqual(config.starts, 4)
        self.assertEqual(config.params().alpha, -1.0)

    def test_unknown_keys(self):
        """Test unknown keys are rejected."""
        with self.assertRaisesRegex(ConfigurationError, "Unknown configuration keys: colour"):
            RunConfig.from_sources({"colour": "red"})

    def test_missing_params(self):
        """Test α and β are required by default."""
        with self.assertRaisesRegex(ConfigurationError, "alpha and beta"):
            RunConfig().validate()

    def test_invalid_settings(self):
        """Test invalid settings fail validation before any compute."""
        base = {"alpha": -1.0, "beta": 3.0}
        cases = [
            {"modes": 0},
            {"starts": 0},
            {"gtol": -1.0},
            {"sweep": []},
            {"sweep": [0.5]},
            {"counts": [0]},
            {"counts": [1, 2, 3]},
            {"R": "x"},
            {"sobolev_starts": -1},
            {"beta": -3.0},
        ]
        for overrides in cases:
            with self.subTest(**{k: str(v) for k, v in overrides.items()}):
                with self.assertRaises(ConfigurationError):
                    RunConfig.from_sources(base, **overrides).validate()

    def test_mistyped_values(self):
        """Test values of the wrong type raise ConfigurationError, not TypeError."""
        base = {"alpha": -1.0, "beta": 3.0}
        cases = [
            {"gtol": "x"},
            {"alpha": "minus one"},
            {"starts": 2.5},
            {"modes": "8"},
            {"seed": True},
            {"domain": 8},
            {"sweep": [1.0, None]},
            {"sweep": "1,2"},
            {"counts": [1.5]},
            {"emit_pgm": "yes"},
            {"R": [2]},
        ]
        for values in cases:
            with self.subTest(**{k: repr(v) for k, v in values.items()}):
                with self.assertRaisesRegex(ConfigurationError, f"{next(iter(values))} must be"):
                    RunConfig.from_sources({**base, **values}).validate()

    def test_integer_parameters_become_floats(self):
        """Test TOML integers for float settings are accepted as floats."""
        config = RunConfig.from_sources({"alpha": -1, "beta": 3, "gtol": 0})
        self.assertIsInstance(config.alpha, float)
        self.assertEqual(config.params().beta, 3.0)
        self.assertEqual(config.gtol, 0.0)

    def test_exact_stretch_and_sweep(self):
        """Test stretch and sweep values given as expressions."""
        config = RunConfig(R="sqrt2", sweep=[1, "3/2"])
        self.assertAlmostEqual(config.stretch, math.sqrt(2))
        self.assertEqual(config.sweep_values(), [1.0, 1.5])

    def test_tile_counts(self):
        """Test a single count broadcasts and the default is 2."""
        self.assertEqual(RunConfig().tile_counts(2), (2, 2))
        self.assertEqual(RunConfig(counts=[3]).tile_counts(3), (3, 3, 3))
        self.assertEqual(RunConfig(counts=[1, 4]).tile_counts(2), (1, 4))

    def test_solver_options(self):
        """Test solver and Sobolev options carry the settings."""
        config = RunConfig(starts=3, seed=7, sobolev_max_iterations=100)
        self.assertEqual(config.solver_options(threads=2).threads, 2)
        self.assertEqual(config.solver_options().seed, 7)
        self.assertEqual(config.sobolev_options().max_iterations, 100)

    def test_to_dict(self):
        """Test the JSON-ready dictionary."""
        data = RunConfig(out=Path("results"), R="sqrt2").to_dict()
        self.assertEqual(data["out"], "results")
        self.assertEqual(data["R"], "sqrt2")
        self.assertEqual(set(data), set(RunConfig.keys()))


class TestLoadConfig(unittest.TestCase):
    """Test cases for TOML loading."""

    def setUp(self):
        """Create a temporary directory."""
        self._tmp = TemporaryDirectory()
        self.root = Path(self._tmp.name)

    def tearDown(self):
        """Remove the temporary directory."""
        self._tmp.cleanup()

    def write(self, text: str) -> Path:
        """Write a config file."""
        path = self.root / "run.toml"
        path.write_text(text, encoding="utf-8")
        return path

    def test_load(self):
        """Test flat keys are loaded."""
        values = load_config(self.write('alpha = -1.0\nbeta = 3.0\ndomain = "torus:hex"\n'))
        self.assertEqual(values, {"alpha": -1.0, "beta": 3.0, "domain": "torus:hex"})

    def test_invalid_files(self):
        """Test missing files, bad TOML, tables and unknown keys."""
        cases = {
            "missing": self.root / "missing.toml",
            "syntax": self.write("alpha = = 1"),
        }
        for name, path in cases.items():
            with self.subTest(name), self.assertRaises(ConfigurationError):
                load_config(path)
        with self.assertRaisesRegex(ConfigurationError, "tables"):
            load_config(self.write("[solver]\nstarts = 3\n"))
        with self.assertRaisesRegex(ConfigurationError, "Unknown"):
            load_config(self.write("speed = 3\n"))
