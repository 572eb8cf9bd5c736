"""Tests for spectral fields."""

import math
import unittest

import numpy as np

from nshridge import ConfigurationError, SpectralField, make_basis, make_domain


class TestSpectralField(unittest.TestCase):
    """Test cases for SpectralField."""

    def setUp(self):
        """Build a box basis."""
        self.basis = make_basis(make_domain("box", [2 * math.pi, 2 * math.pi]), modes=4)

    def test_constant(self):
        """Test a constant field has constant values."""
        u = SpectralField.constant(self.basis, 1.5)
        np.testing.assert_allclose(u.values, 1.5, atol=1e-13)
        self.assertAlmostEqual(u.norm_squared(), 1.5**2 * 4 * math.pi**2)

    def test_zeros(self):
        """Test the zero field."""
        self.assertTrue(SpectralField.zeros(self.basis).is_zero())
        self.assertFalse(SpectralField.constant(self.basis, 1e-300).is_zero())

    def test_immutable(self):
        """Test coefficients and values cannot be written, and the input is copied."""
        coeffs = self.basis.wave_mode((1, 0))
        u = SpectralField(self.basis, coeffs)
        coeffs[0, 0] = 99.0
        self.assertEqual(u.coeffs[0, 0], 0.0)
        with self.assertRaises(ValueError):
            u.coeffs[0, 0] = 1.0
        with self.assertRaises(ValueError):
            u.values[0, 0] = 1.0

    def test_arithmetic(self):
        """Test sums, differences, scaling and negation."""
        a = SpectralField(self.basis, self.basis.wave_mode((1, 0)))
        b = SpectralField.constant(self.basis, 2.0)
        np.testing.assert_allclose((a + b).values, a.values + 2.0, atol=1e-13)
        np.testing.assert_allclose((a - b).values, a.values - 2.0, atol=1e-13)
        np.testing.assert_allclose((3 * a).values, 3 * a.values, atol=1e-13)
        np.testing.assert_allclose((a * 3).coeffs, (3 * a).coeffs)
        np.testing.assert_allclose((-a).coeffs, -a.coeffs)

    def test_incompatible_bases(self):
        """Test fields on different bases cannot be combined."""
        other = make_basis(make_domain("box", [2 * math.pi, 2 * math.pi]), modes=4)
        a = SpectralField.constant(self.basis, 1.0)
        b = SpectralField.constant(other, 1.0)
        self.assertFalse(a.compatible(b))
        with self.assertRaises(ConfigurationError):
            _ = a + b

    def test_shape_mismatch(self):
        """Test coefficients of the wrong shape are rejected."""
        with self.assertRaises(ConfigurationError):
            SpectralField(self.basis, np.zeros((3, 3)))

    def test_non_finite(self):
        """Test non-finite coefficients are rejected."""
        coeffs = self.basis.zeros()
        coeffs[1, 1] = np.nan
        with self.assertRaises(ConfigurationError):
            SpectralField(self.basis, coeffs)

    def test_from_values(self):
        """Test projection of grid values and the domain accessors."""
        x, y = self.basis.grid_coordinates()
        u = SpectralField.from_values(self.basis, np.cos(x) * np.cos(2 * y))
        np.testing.assert_allclose(u.coeffs, self.basis.wave_mode((2, 4)), atol=1e-12)
        self.assertIs(u.domain, self.basis.domain)
        self.assertEqual(u.modes, 4)
