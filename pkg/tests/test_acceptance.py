"""End-to-end checks of the formulas, the inequalities and full ridge solves.

The ridge solves run at full resolution and are marked expensive; run them
with `pytest --run-expensive`.
"""

import math
import unittest

import numpy as np
from numpy.polynomial import Polynomial
import pytest
from scipy.optimize import brentq

from nshridge import NoRidgeError, Params, SpectralField, make_basis, make_domain
from nshridge.equilibria import constant_solutions, second_variation_at_constant, sobolev_constants
from nshridge.functionals import FibrationClass, f_of_s, fibration_classify
from nshridge.nehari import SolverOptions, minimize_ridge, plateau_bump_bound
from nshridge.spectral import quadratic_form_Q
from nshridge.tiling import reflect_extend, tiling_report

SAMPLES = 10_000


class TestFibrationOracle(unittest.TestCase):
    """Closed-form fibration analysis against dense sampling of t ↦ E[tv]."""

    @classmethod
    def setUpClass(cls):
        """Classify 500 random fields with random β."""
        basis = make_basis(make_domain("box", [4 * math.pi, 3 * math.pi]), modes=6)
        rng = np.random.default_rng(2024)
        cls.cases = []
        for _ in range(500):
            coeffs = basis.random_coeffs(rng) + basis.constant(rng.uniform(-1.0, 1.0))
            p = Params(-1.0, float(rng.uniform(0.5, 6.0)))
            cls.cases.append(fibration_classify(SpectralField(basis, coeffs), p))

    def test_classification_and_roots(self):
        """Test sampled critical points match the classification and the roots."""
        for data in self.cases:
            t_max = 4 * (data.t2 if data.t2 is not None else math.sqrt(data.Q / data.D))
            t = np.linspace(t_max / SAMPLES, t_max, SAMPLES)
            slope = data.Q - data.B * t + data.D * t**2
            changes = np.flatnonzero(np.sign(slope[:-1]) != np.sign(slope[1:]))
            if len(changes) == 2:
                self.assertIs(data.classification, FibrationClass.NON_MONOTONOUS)
                quadratic = Polynomial([data.Q, -data.B, data.D])
                roots = [brentq(quadratic, t[i], t[i + 1], xtol=1e-14) for i in changes]
                self.assertAlmostEqual(roots[0], data.t1, delta=1e-8 * data.t1)
                self.assertAlmostEqual(roots[1], data.t2, delta=1e-8 * data.t2)
            else:
                self.assertEqual(len(changes), 0)
                if data.classification is FibrationClass.NON_MONOTONOUS:
                    # both roots inside one sampling interval
                    self.assertLess(data.t2 - data.t1, 2 * t_max / SAMPLES)

    def test_sign_conditions(self):
        """Test H[t₁v] < 0 < H[t₂v] at every non-monotonous instance."""
        ridge = [d for d in self.cases if d.classification is FibrationClass.NON_MONOTONOUS]
        self.assertGreater(len(ridge), 50)
        for data in ridge:
            self.assertLess(data.H(data.t1), 0.0)
            self.assertGreater(data.H(data.t2), 0.0)

    def test_energy_formula(self):
        """Test the ridge energy equals Q³f(s)/(3β²(∫v³)²)."""
        for data in self.cases:
            if data.classification is FibrationClass.NON_MONOTONOUS:
                self.assertAlmostEqual(
                    data.ridge_energy_formula,
                    data.ridge_energy,
                    delta=1e-10 * abs(data.ridge_energy),
                )

    def test_f_of_s(self):
        """Test f(1) = 1 exactly, f(1000) ≈ ½ and f decreasing on [1, 100]."""
        self.assertEqual(f_of_s(1.0), 1.0)
        self.assertLess(abs(f_of_s(1000.0) - 0.5), 1e-5)
        values = [f_of_s(s) for s in np.linspace(1.0, 100.0, 1000)]
        self.assertTrue(all(a > b for a, b in zip(values, values[1:], strict=False)))


class TestConstantsAcceptance(unittest.TestCase):
    """Constant solutions and their second variation."""

    def test_known_roots(self):
        """Test (α, β) = (−1, 3) gives c₋ = 1, c₊ = 2, m₋ = −2, m₊ = 1."""
        constants = constant_solutions(Params(-1.0, 3.0), make_domain("box", [1.0]))
        self.assertAlmostEqual(constants.c_minus, 1.0, delta=1e-12)
        self.assertAlmostEqual(constants.c_plus, 2.0, delta=1e-12)
        self.assertAlmostEqual(constants.m_minus, -2.0, delta=1e-12)
        self.assertAlmostEqual(constants.m_plus, 1.0, delta=1e-12)

    def test_second_variation(self):
        """Test d²E[c₊](h,h) > Q[h] for random h and d²E[c₋](1,1) < 0 at (−1, 4)."""
        p = Params(-1.0, 4.0)
        basis = make_basis(make_domain("box", [4 * math.pi, 4 * math.pi]), modes=8)
        constants = constant_solutions(p, basis.domain)
        for c in (constants.c_minus, constants.c_plus):
            self.assertLess(abs((1 - p.alpha) - p.beta * c + c**2), 1e-12)
        self.assertLess(constants.E_plus, 0.0)
        rng = np.random.default_rng(8)
        for _ in range(100):
            h = SpectralField(basis, basis.random_coeffs(rng))
            self.assertGreater(
                second_variation_at_constant(p, constants.c_plus, h), quadratic_form_Q(h, p)
            )
        one = SpectralField.constant(basis, 1.0)
        self.assertLess(second_variation_at_constant(p, constants.c_minus, one), 0.0)


@pytest.mark.expensive
class TestRidgeSolveAcceptance(unittest.TestCase):
    """Full ridge solves on an 8π square box and on the hexagonal torus."""

    ALPHA = -0.5

    @classmethod
    def setUpClass(cls):
        """Estimate the Sobolev constants and solve at β = 1.05·β₀."""
        cls.basis = make_basis(make_domain("box", [8 * math.pi, 8 * math.pi]))
        cls.constants = sobolev_constants(cls.basis, Params(cls.ALPHA, 1.0))
        cls.p = Params(cls.ALPHA, 1.05 * cls.constants.beta0)
        cls.options = SolverOptions(starts=12, seed=0)
        cls.bump = plateau_bump_bound(cls.basis, cls.p)
        cls.result = minimize_ridge(cls.basis, cls.p, cls.options, cls.constants, cls.bump)

    def test_solution_inequalities(self):
        """Test the solution converges and passes every ridge inequality."""
        result = self.result
        self.assertTrue(result.converged)
        self.assertLessEqual(result.L_relative, 1e-8)
        self.assertLess(result.H_value, 0.0)
        self.assertLessEqual(result.gradient_residual, 1e-6)
        report = result.inequalities
        for name in ("energy_growth_order", "L4_separation", "ridge_coercive"):
            with self.subTest(check=name):
                self.assertTrue(report.get(name).passed)
        self.assertTrue(report.passed)

    def test_sobolev_bracket(self):
        """Test √(−α) ≤ S₂ ≤ √(1−α)."""
        self.assertTrue(all(check.passed for check in self.constants.bracket_checks()))

    def test_empty_nehari_below_two_s2(self):
        """Test β = 0.9·2S₂ leaves no ridge direction."""
        p = Params(self.ALPHA, 0.9 * 2 * self.constants.S2.value)
        with self.assertRaises(NoRidgeError) as context:
            minimize_ridge(self.basis, p, self.options)
        self.assertEqual(context.exception.exit_code, 3)

    def test_reflection_tiling(self):
        """Test the reflected solution is even, additive and solves the torus problem."""
        report = tiling_report(reflect_extend(self.result.U, 2), self.p)
        self.assertLess(report.symmetry_error, 1e-10)
        self.assertLess(report.energy_ratio_error, 1e-10)
        self.assertLessEqual(report.torus_residual, 1e-5)
        self.assertTrue(report.passed)

    def test_determinism(self):
        """Test a repeated run with the same seed gives identical diagnostics."""
        again = minimize_ridge(self.basis, self.p, self.options, self.constants, self.bump)
        self.assertEqual(again.to_dict(), self.result.to_dict())

    def test_irreducibility_trend(self):
        """Test E[c₋] grows with the area while E[U] stays below the bump bound."""
        energies = {}
        for side in (2 * math.pi, 4 * math.pi, 8 * math.pi):
            domain = make_domain("box", [side, side])
            energies[side] = constant_solutions(self.p, domain).E_minus
        self.assertAlmostEqual(energies[8 * math.pi] / energies[2 * math.pi], 16.0, delta=0.16)
        diagnostics = self.result.diagnostics
        self.assertTrue(diagnostics.below_bump)
        self.assertTrue(all(value > 1e-3 for value in diagnostics.axis_dependence))

    def test_hexagonal_torus(self):
        """Test a ridge solution on the hexagonal torus meets the same thresholds."""
        rows = [[8 * math.pi, 4 * math.pi], [0.0, 4 * math.sqrt(3) * math.pi]]
        basis = make_basis(make_domain("torus", rows))
        constants = sobolev_constants(basis, self.p)
        result = minimize_ridge(basis, self.p, self.options, constants)
        self.assertTrue(result.converged)
        self.assertLessEqual(result.L_relative, 1e-8)
        self.assertLess(result.H_value, 0.0)
        self.assertLessEqual(result.gradient_residual, 1e-6)
