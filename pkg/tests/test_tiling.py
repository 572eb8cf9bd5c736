"""Tests for reflection tilings."""

import math
import unittest
from unittest import mock

import numpy as np

from nshridge import ConfigurationError, Params, SpectralField, make_basis, make_domain
from nshridge.domain import DomainKind
from nshridge.functionals import energy_E
from nshridge.tiling import ReflectionTiling, reflect_extend, residual_entire, tiling_report

P = Params(-1.0, 3.0)


class TestReflectExtend(unittest.TestCase):
    """Test cases for reflect_extend."""

    def setUp(self):
        """Build a random field on a 2D box."""
        self.basis = make_basis(make_domain("box", [2 * math.pi, 3 * math.pi]), modes=4)
        rng = np.random.default_rng(8)
        self.U = SpectralField(self.basis, self.basis.random_coeffs(rng))

    def test_cell_geometry(self):
        """Test the cell box is the base box scaled by the counts."""
        tiling = reflect_extend(self.U, (2, 3))
        cell = tiling.cell
        self.assertEqual(cell.domain.kind, DomainKind.BOX)
        np.testing.assert_allclose(cell.domain.scaled_lengths, [4 * math.pi, 9 * math.pi])
        self.assertEqual(cell.modes, 12)
        self.assertEqual(tiling.copies, 6)

    def test_restriction(self):
        """Test the cell restricted to the base box reproduces U."""
        tiling = reflect_extend(self.U, (2, 3))
        np.testing.assert_allclose(tiling.restrict(), self.U.values, atol=1e-11)

    def test_report_geometric_checks(self):
        """Test symmetry, continuity and energy additivity of the cell."""
        report = tiling_report(reflect_extend(self.U, 2))
        self.assertEqual(report.counts, [2, 2])
        self.assertLess(report.interface_jump, 1e-10)
        self.assertLess(report.interface_slope, 1e-10)
        self.assertLess(report.symmetry_error, 1e-10)
        self.assertLess(report.restriction_error, 1e-10)
        self.assertLess(report.energy_ratio_error, 1e-10)
        self.assertIsNone(report.base_residual)
        self.assertTrue(report.passed)

    def test_report_odd_and_even_interfaces(self):
        """Test three copies meet the far face at the first interface and the near face at the second."""
        report = tiling_report(reflect_extend(self.U, (3, 3)))
        self.assertLess(report.interface_jump, 1e-10)
        self.assertLess(report.symmetry_error, 1e-10)
        self.assertTrue(report.passed)

    def test_report_detects_interface_value_error(self):
        """Test a cell that is symmetric but wrong on the interface fails the jump check."""
        basis = make_basis(make_domain("box", [2 * math.pi]), modes=4)
        rng = np.random.default_rng(3)
        U = SpectralField(basis, basis.random_coeffs(rng))
        tiling = reflect_extend(U, 2)
        correct = tiling.cell
        # cos(x/2) on [0, 4π] is even about 2π and equals −1 there
        wrong = SpectralField(correct.basis, correct.coeffs + 0.1 * correct.basis.wave_mode((2,)))
        scale = float(np.max(np.abs(U.values)))
        with mock.patch.object(
            ReflectionTiling, "cell", new_callable=mock.PropertyMock, return_value=wrong
        ):
            report = tiling_report(tiling)
        self.assertAlmostEqual(report.interface_jump, 0.1 / scale, delta=1e-10)
        self.assertLess(report.interface_slope, 1e-10)
        self.assertLess(report.symmetry_error, 1e-10)
        self.assertFalse(report.passed)

    def test_energy_scales_with_copies(self):
        """Test E[cell] = copies·E[U]."""
        tiling = reflect_extend(self.U, (3, 1))
        self.assertAlmostEqual(
            energy_E(tiling.cell, P), 3 * energy_E(self.U, P), delta=1e-9 * abs(energy_E(self.U, P))
        )

    def test_periodic_field(self):
        """Test the periodic cell is a torus field agreeing with the cosine series."""
        tiling = reflect_extend(self.U, 2)
        periodic = tiling.periodic
        self.assertEqual(periodic.domain.kind, DomainKind.TORUS)
        np.testing.assert_allclose(
            periodic.domain.scaled_matrix, np.diag([4 * math.pi, 6 * math.pi])
        )
        x = periodic.basis.grid_coordinates()
        axes = [x[0][:, 0], x[1][0, :]]
        expected = self.basis.evaluate_on_axes(self.U.coeffs, axes)
        np.testing.assert_allclose(periodic.values, expected, atol=1e-11)

    def test_invalid_counts(self):
        """Test counts below 1 or of the wrong length are rejected."""
        for counts in (0, (1, 2, 3), (2, -1)):
            with self.subTest(counts=counts), self.assertRaises(ConfigurationError):
                reflect_extend(self.U, counts)

    def test_torus_field_rejected(self):
        """Test reflection needs a box field."""
        torus = make_basis(make_domain("torus", [[2 * math.pi]]), modes=4)
        with self.assertRaises(ConfigurationError):
            reflect_extend(SpectralField.constant(torus, 1.0), 2)


class TestResiduals(unittest.TestCase):
    """Test cases for residuals of tiled solutions."""

    def test_constant_solution_tiles(self):
        """Test the tiled constant c₋ is an entire solution."""
        basis = make_basis(make_domain("box", [2 * math.pi]), modes=4)
        report = tiling_report(reflect_extend(SpectralField.constant(basis, 1.0), 3), P)
        self.assertLess(report.base_residual, 1e-12)
        self.assertLess(report.torus_residual, 1e-12)
        self.assertTrue(report.passed)
        self.assertEqual(
            set(report.to_dict()),
            {"counts", "interface_jump", "interface_slope", "symmetry_error",
             "restriction_error", "energy_ratio_error", "base_residual", "torus_residual",
             "passed"},
        )

    def test_torus_residual_matches_base_residual(self):
        """Test the periodic extension of a non-solution has the base box residual."""
        basis = make_basis(make_domain("box", [2 * math.pi, 3 * math.pi]), modes=4)
        rng = np.random.default_rng(12)
        U = SpectralField(basis, basis.constant(1.0) + 0.2 * basis.random_coeffs(rng))
        report = tiling_report(reflect_extend(U, 2), P)
        self.assertGreater(report.base_residual, 1e-3)
        self.assertAlmostEqual(report.torus_residual, report.base_residual, delta=1e-10)
        self.assertTrue(report.passed)

    def test_residual_entire_needs_torus(self):
        """Test entire-solution residuals refuse box fields."""
        basis = make_basis(make_domain("box", [2 * math.pi]), modes=4)
        with self.assertRaises(ConfigurationError):
            residual_entire(SpectralField.constant(basis, 1.0), P)
