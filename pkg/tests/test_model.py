"""Tests for the SwiftHohenberg entry point."""

import math
import unittest

import numpy as np

from nshridge import SwiftHohenberg, make_domain
from nshridge.descent import DescentOptions
from nshridge.functionals import FibrationClass
from nshridge.nehari import SolverOptions

FAST = DescentOptions(max_iterations=2000, gtol=1e-7, ftol=1e-12, window=20)


class TestSwiftHohenberg(unittest.TestCase):
    """Test cases for SwiftHohenberg."""

    @classmethod
    def setUpClass(cls):
        """Build a small 1D problem and compute its Sobolev constants once."""
        cls.problem = SwiftHohenberg(-1.0, 3.0, make_domain("box", [4 * math.pi]), modes=8)
        cls.sobolev = cls.problem.sobolev(starts=1, seed=0, options=FAST, threads=1)

    def test_basis_and_field(self):
        """Test the basis follows the domain and truncation."""
        problem = self.problem
        self.assertEqual(problem.basis.modes, 8)
        u = problem.field(np.full(problem.basis.grid_shape, 1.5))
        np.testing.assert_allclose(u.values, 1.5, atol=1e-12)

    def test_constants(self):
        """Test the constant solutions."""
        constants = self.problem.constants()
        self.assertAlmostEqual(constants.c_minus, 1.0)
        self.assertAlmostEqual(constants.c_plus, 2.0)

    def test_fibration(self):
        """Test the fibration of the constant direction."""
        v = self.problem.field(np.ones(self.problem.basis.grid_shape))
        data = self.problem.fibration(v)
        self.assertIs(data.classification, FibrationClass.NON_MONOTONOUS)
        self.assertAlmostEqual(data.t1, 1.0)

    def test_thresholds_reuse_sobolev(self):
        """Test thresholds at the domain stretch reuse the stored constants."""
        result = self.problem.thresholds(R_sweep=[1.0], starts=1, options=FAST, threads=1)
        self.assertIs(result.constants, self.sobolev)
        self.assertAlmostEqual(result.beta_star_estimate, self.sobolev.beta0)

    def test_solve_verify_diagnose(self):
        """Test a solve includes the Sobolev checks and its field verifies."""
        result = self.problem.solve(SolverOptions(starts=2, max_iterations=2000, threads=1))
        names = [check.name for check in result.inequalities.checks]
        self.assertIn("L4_separation", names)
        self.assertIn("end_of_ridge_energy", names)
        if self.problem.bump().energy is not None:
            self.assertIn("bump_energy_bound", names)
        report = self.problem.verify(result.U)
        self.assertEqual([c.name for c in report.checks], names)
        self.assertEqual(len(self.problem.diagnostics(result.U).axis_dependence), 1)

    def test_stretched(self):
        """Test stretching keeps the truncation and scales the volume."""
        stretched = self.problem.stretched(2.0)
        self.assertEqual(stretched.basis.modes, 8)
        self.assertAlmostEqual(stretched.domain.volume, 2 * self.problem.domain.volume)
        self.assertIsNone(stretched._sobolev)
