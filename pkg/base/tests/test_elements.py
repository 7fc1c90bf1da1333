# Unit tests for elements and scalars.
import unittest
from fractions import Fraction

from hypothesis import given, strategies as st

from base.elements import BasisWord, Element
from base.errors import HomogeneityError
from base.scalars import binomial, sort_with_sign, to_scalar

WORDS = [BasisWord(key=(i,), degree=i % 3, label=f"e{i}") for i in range(6)]

coefficient_maps = st.dictionaries(st.sampled_from(WORDS), st.integers(-5, 5), max_size=6)


class TestScalars(unittest.TestCase):
    def test_to_scalar(self):
        self.assertEqual(to_scalar("3/2"), Fraction(3, 2))
        self.assertEqual(to_scalar(4), Fraction(4))
        with self.assertRaises(TypeError):
            to_scalar(0.5)

    def test_generalized_binomial(self):
        self.assertEqual(binomial(5, 2), 10)
        self.assertEqual(binomial(-1, 3), -1)
        self.assertEqual(binomial(-2, 2), 3)
        self.assertEqual(binomial(3, 5), 0)

    def test_sort_with_sign(self):
        self.assertEqual(sort_with_sign([2, 1]), ((1, 2), -1))
        self.assertEqual(sort_with_sign([3, 1, 2]), ((1, 2, 3), 1))
        self.assertEqual(sort_with_sign([1, 1])[1], 0)


class TestElement(unittest.TestCase):
    def test_zero_coefficients_dropped(self):
        e = Element({WORDS[0]: 0, WORDS[1]: 2})
        self.assertEqual(len(e), 1)
        self.assertEqual(e - e, Element.zero())
        self.assertTrue(Element().is_zero())

    def test_degree(self):
        self.assertIsNone(Element().degree())
        self.assertEqual(Element.from_word(WORDS[2]).degree(), 2)
        with self.assertRaises(HomogeneityError):
            Element({WORDS[0]: 1, WORDS[1]: 1}).degree()

    def test_parity_of_mixed_degrees(self):
        even = Element({WORDS[0]: 1, WORDS[2]: 1})
        self.assertEqual(even.parity(), 0)
        self.assertEqual(set(even.homogeneous_parts()), {0, 2})

    def test_serialize_sorted(self):
        e = Element({WORDS[3]: Fraction(-3, 2), WORDS[1]: 1})
        self.assertEqual(e.serialize(), ["1 * e1", "-3/2 * e3"])
        self.assertEqual(str(Element()), "0")

    @given(coefficient_maps, coefficient_maps)
    def test_addition_commutes(self, a, b):
        x, y = Element(a), Element(b)
        self.assertEqual(x + y, y + x)
        self.assertEqual((x + y) - y, x)

    @given(coefficient_maps)
    def test_scaling(self, a):
        x = Element(a)
        self.assertEqual(x.scale(0), Element())
        self.assertEqual(2 * x, x + x)
        self.assertEqual(-x, x.scale(-1))
