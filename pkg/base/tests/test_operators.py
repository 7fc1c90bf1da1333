# Unit tests for linear operators and structure constant algebras.
import unittest

from base.algebra import AlgebraFlags
from base.elements import Element
from base.errors import AlgebraError, ConsistencyError
from base.linalg import image, in_span, kernel, rank_of
from base.operators import (
    LinOp,
    even_derivative,
    identity_operator,
    left_multiplication,
    odd_derivative,
    supercommutator,
)
from base.polynomial import PolynomialSuperalgebra
from base.random_gen import random_operator
from base.structure import StructureConstantAlgebra, random_structure_algebra


class TestDerivatives(unittest.TestCase):
    def setUp(self):
        self.alg = PolynomialSuperalgebra(1, 2, 4)
        g = self.alg.generator_map()
        self.x, self.t1, self.t2 = g["x1"], g["t1"], g["t2"]

    def test_even_derivative(self):
        d = even_derivative(self.alg, 0)
        self.assertEqual(d(self.alg.power(self.x, 3)), self.alg.power(self.x, 2).scale(3))

    def test_left_odd_derivative_sign(self):
        d2 = odd_derivative(self.alg, 1)
        t1t2 = self.alg.multiply(self.t1, self.t2)
        self.assertEqual(d2(t1t2), -self.t1)
        self.assertEqual(odd_derivative(self.alg, 0)(t1t2), self.t2)

    def test_odd_derivatives_anticommute(self):
        d1, d2 = odd_derivative(self.alg, 0), odd_derivative(self.alg, 1)
        bracket = supercommutator(d1, d2)
        self.assertTrue(bracket.is_zero_on(self.alg.basis()))

    def test_heisenberg_relation(self):
        d = even_derivative(self.alg, 0)
        x = left_multiplication(self.alg, self.x)
        commutator = supercommutator(d, x) - identity_operator()
        words = [w for w in self.alg.basis() if self.alg.truncation_load(w) < 4]
        self.assertTrue(commutator.is_zero_on(words))

    def test_degree_violation_detected(self):
        bad = LinOp(lambda w: Element.from_word(w), 1, "bad")
        with self.assertRaises(ConsistencyError):
            bad(self.x)

    def test_random_operator_kills_unit(self):
        op = random_operator(self.alg, -1, seed=3, kill_unit=True)
        self.assertTrue(op(self.alg.unit()).is_zero())
        self.assertEqual(op.degree, -1)


class TestStructureConstantAlgebra(unittest.TestCase):
    def test_degree_additivity_enforced(self):
        with self.assertRaises(AlgebraError):
            StructureConstantAlgebra([0, 1], {(1, 1): {1: 1}})

    def test_one_dimensional_unital(self):
        alg = StructureConstantAlgebra(
            [0], {(0, 0): {0: 1}}, AlgebraFlags(True, True, True), unit_index=0
        )
        self.assertEqual(alg.check_flags(), [])
        self.assertEqual(alg.multiply(alg.unit(), alg.unit()), alg.unit())

    def test_random_algebra_is_deterministic(self):
        a = random_structure_algebra(5)
        b = random_structure_algebra(5)
        self.assertEqual(a.table, b.table)
        self.assertEqual(a.check_flags(), [])


class TestLinalg(unittest.TestCase):
    def setUp(self):
        self.alg = PolynomialSuperalgebra(0, 3)
        self.gens = [self.alg.odd_generator(i) for i in range(3)]

    def test_rank_and_span(self):
        a, b, c = self.gens
        self.assertEqual(rank_of([a, b, a + b]), 2)
        self.assertTrue(in_span(a - b, [a, b]))
        self.assertFalse(in_span(c, [a, b]))

    def test_kernel_and_image(self):
        d = odd_derivative(self.alg, 0)
        self.assertEqual(len(kernel([d], self.alg.basis())), 4)
        self.assertEqual(len(image(d, self.alg.basis())), 4)
