# Unit tests for Phi-forms.
import unittest

from base.errors import HomogeneityError, PreconditionError
from base.operators import even_derivative, left_multiplication, odd_derivative
from base.polynomial import PolynomialSuperalgebra
from base.random_gen import random_operator
from base.structure import random_structure_algebra
from diffops.checks import check_nesting, check_phi4_explicit, check_phi_agreement
from diffops.phi import PhiSigns, phi4_explicit, phi_form, phi_form_koszul


def derivative_power(alg, k):
    op = even_derivative(alg, 0)
    for _ in range(k - 1):
        op = op.compose(even_derivative(alg, 0))
    return op


class TestPhiForm(unittest.TestCase):
    def setUp(self):
        self.alg = PolynomialSuperalgebra(1, 0, 8)
        self.x = self.alg.generator_map()["x1"]

    def test_derivation_has_vanishing_phi2(self):
        d = even_derivative(self.alg, 0)
        x2 = self.alg.power(self.x, 2)
        self.assertTrue(phi_form(self.alg, d, [x2, self.x]).is_zero())

    def test_second_derivative_phi2(self):
        # Phi^2_{d^2/dx^2}(x, x) = 2
        d2 = derivative_power(self.alg, 2)
        self.assertEqual(phi_form(self.alg, d2, [self.x, self.x]), self.alg.unit().scale(2))

    def test_phi4_of_fourth_derivative(self):
        d4 = derivative_power(self.alg, 4)
        value = phi_form(self.alg, d4, [self.x] * 4)
        self.assertEqual(value, self.alg.unit().scale(24))
        self.assertEqual(phi4_explicit(self.alg, d4, *[self.x] * 4), value)

    def test_third_derivative_phi4_vanishes(self):
        d3 = derivative_power(self.alg, 3)
        self.assertTrue(phi_form(self.alg, d3, [self.x] * 4).is_zero())

    def test_zero_argument(self):
        d = even_derivative(self.alg, 0)
        self.assertTrue(phi_form(self.alg, d, [self.x, self.alg.unit().scale(0)]).is_zero())

    def test_inhomogeneous_argument_rejected(self):
        alg = PolynomialSuperalgebra(1, 1, 2)
        g = alg.generator_map()
        with self.assertRaises(HomogeneityError) as ctx:
            phi_form(alg, odd_derivative(alg, 0), [g["x1"], g["x1"] + g["t1"]])
        self.assertEqual(ctx.exception.argument, 1)

    def test_left_multiplication_unital_adjust(self):
        mult = left_multiplication(self.alg, self.x)
        self.assertTrue(phi_form(self.alg, mult, [self.x], unital_adjust=True).is_zero())
        self.assertFalse(phi_form(self.alg, mult, [self.x]).is_zero())

    def test_koszul_requires_laws(self):
        alg = random_structure_algebra(1)
        delta = random_operator(alg, 1, seed=2)
        with self.assertRaises(PreconditionError):
            phi_form_koszul(alg, delta, [alg.basis_element(0)])

    def test_odd_phi2_on_exterior(self):
        alg = PolynomialSuperalgebra(0, 2)
        t1, t2 = alg.odd_generator(0), alg.odd_generator(1)
        d = odd_derivative(alg, 0)
        self.assertTrue(phi_form(alg, d, [t1, t2]).is_zero())


class TestPhiAgreement(unittest.TestCase):
    def setUp(self):
        self.alg = PolynomialSuperalgebra(2, 2, 4)

    def test_recursive_matches_koszul_when_unit_killed(self):
        for degree in (-1, 1, 0):
            delta = random_operator(self.alg, degree, seed=11 + degree, kill_unit=True)
            report = check_phi_agreement(self.alg, delta, r_max=5, samples=6, seed=3)
            self.assertTrue(report.passed, report.to_dict())

    def test_unital_adjust_matches_koszul_for_any_operator(self):
        delta = random_operator(self.alg, -1, seed=5)
        report = check_phi_agreement(self.alg, delta, r_max=4, samples=6, seed=4, unital_adjust=True)
        self.assertTrue(report.passed, report.to_dict())

    def test_phi4_explicit_matches(self):
        delta = random_operator(self.alg, 1, seed=9)
        self.assertTrue(check_phi4_explicit(self.alg, delta, samples=10).passed)

    def test_flipped_sign_is_noticed(self):
        delta = random_operator(self.alg, -1, seed=12, kill_unit=True)
        report = check_phi_agreement(self.alg, delta, r_max=3, samples=10, signs=PhiSigns(left=1))
        self.assertFalse(report.passed)
        self.assertIsNotNone(report.counterexample)

    def test_nesting_on_general_algebra(self):
        alg = random_structure_algebra(3)
        delta = random_operator(alg, 1, seed=4)
        self.assertTrue(check_nesting(alg, delta, samples=8).passed)
