# Unit tests for the polynomial superalgebra.
import unittest

from base.errors import AlgebraError
from base.polynomial import PolynomialSuperalgebra
from base.random_gen import random_element, random_homogeneous


class TestPolynomialSuperalgebra(unittest.TestCase):
    def setUp(self):
        self.alg = PolynomialSuperalgebra(2, 2, 4)
        g = self.alg.generator_map()
        self.x1, self.x2, self.t1, self.t2 = g["x1"], g["x2"], g["t1"], g["t2"]

    def test_odd_generators_anticommute(self):
        m = self.alg.multiply
        self.assertEqual(m(self.t1, self.t2), -m(self.t2, self.t1))
        self.assertTrue(m(self.t1, self.t1).is_zero())

    def test_truncation(self):
        x1_4 = self.alg.power(self.x1, 4)
        self.assertEqual(str(x1_4), "1 * x1^4")
        self.assertTrue(self.alg.multiply(x1_4, self.x2).is_zero())

    def test_degrees_and_labels(self):
        word = self.alg.multiply(self.alg.multiply(self.x1, self.t1), self.t2).words()[0]
        self.assertEqual(word.degree, 2)
        self.assertEqual(word.label, "x1*t1*t2")
        self.assertEqual(str(self.alg.unit()), "1 * 1")

    def test_monomial_sign(self):
        self.assertEqual(self.alg.monomial([0, 0], (1, 0)), -self.alg.monomial([0, 0], (0, 1)))

    def test_flags_hold(self):
        small = PolynomialSuperalgebra(1, 2, 2)
        self.assertEqual(small.check_flags(), [])

    def test_basis_size(self):
        # monomials of degree <= 4 in 2 variables, times 4 odd words
        self.assertEqual(len(self.alg.basis()), 15 * 4)

    def test_owns(self):
        other = PolynomialSuperalgebra(3, 1, 2)
        with self.assertRaises(AlgebraError):
            self.alg.validate(other.generator_map()["x3"])

    def test_cap_required(self):
        with self.assertRaises(AlgebraError):
            PolynomialSuperalgebra(1, 0)


class TestRandomElements(unittest.TestCase):
    def setUp(self):
        self.alg = PolynomialSuperalgebra(2, 2, 4)

    def test_same_seed_same_element(self):
        self.assertEqual(random_element(self.alg, 7, 3), random_element(self.alg, 7, 3))

    def test_degree_bound_zero_is_unit_multiple(self):
        for seed in range(10):
            element = random_element(self.alg, seed, 0)
            self.assertTrue(set(element.words()) <= set(self.alg.unit().words()))

    def test_term_limit(self):
        for seed in range(20):
            self.assertLessEqual(len(random_element(self.alg, seed, 4)), 6)

    def test_homogeneous(self):
        for seed in range(20):
            self.assertTrue(random_homogeneous(self.alg, seed, 3).is_homogeneous())
