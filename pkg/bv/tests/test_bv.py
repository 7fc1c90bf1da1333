# Unit tests for generalized BV algebras.
import unittest

from base.errors import PreconditionError
from base.operators import odd_derivative, zero_operator
from base.polynomial import PolynomialSuperalgebra
from base.random_gen import random_operator
from base.structure import random_structure_algebra
from bv.classical import classical_bv_algebra, classical_bv_instance
from bv.dbva import (
    check_induced_product,
    cohomology_representatives,
    eigenspaces,
    euler_dbva_example,
    verify_dbva,
)
from bv.identities import (
    check_d_derivation,
    check_gbva_identities,
    check_general_identities,
    check_gerstenhaber_axioms,
    homogeneous_pool,
)
from bv.instance import make_gbva_instance
from diffops.phi import PhiSigns


class TestClassicalBracket(unittest.TestCase):
    def setUp(self):
        self.inst = classical_bv_instance(2, 4)
        self.g = self.inst.alg.generator_map()

    def test_flags(self):
        self.assertIsNone(self.inst.flags.failed())

    def test_canonical_pairing(self):
        unit = self.inst.alg.unit()
        self.assertEqual(self.inst.bracket(self.g["x1"], self.g["t1"]), unit)
        self.assertEqual(self.inst.bracket(self.g["t1"], self.g["x1"]), unit.scale(-1))
        self.assertTrue(self.inst.bracket(self.g["x1"], self.g["t2"]).is_zero())

    def test_identities(self):
        reports = check_gbva_identities(self.inst, samples=30, seed=1)
        self.assertEqual([r.name for r in reports], ["skew-symmetry", "jacobi", "poisson", "delta-derivation"])
        for report in reports:
            self.assertTrue(report.passed, report.to_dict())

    def test_gerstenhaber_axioms(self):
        alg = self.inst.alg
        pool = homogeneous_pool(alg, 6, seed=2, load_bound=1)
        reports = check_gerstenhaber_axioms(alg, self.inst.bracket, pool, samples=40)
        self.assertTrue(all(r.passed for r in reports))

    def test_refuses_without_square_zero(self):
        alg, _ = classical_bv_algebra(1, 3)
        inst = make_gbva_instance(alg, odd_derivative(alg, 0).compose(odd_derivative(alg, 0)))
        self.assertEqual(inst.flags.failed(), "delta_odd")
        with self.assertRaises(PreconditionError) as ctx:
            check_gbva_identities(inst)
        self.assertEqual(ctx.exception.flag, "delta_odd")


class TestGeneralIdentities(unittest.TestCase):
    def test_random_nonassociative_algebra(self):
        alg = random_structure_algebra(seed=7)
        delta = random_operator(alg, 1, seed=8)
        for report in check_general_identities(alg, delta, samples=60, seed=3):
            self.assertTrue(report.passed, report.to_dict())

    def test_second_random_operator(self):
        alg = random_structure_algebra(seed=2)
        delta = random_operator(alg, -1, seed=5)
        self.assertTrue(all(r.passed for r in check_general_identities(alg, delta, samples=60)))

    def test_even_operator_refused(self):
        alg = random_structure_algebra(seed=7)
        with self.assertRaises(PreconditionError):
            check_general_identities(alg, random_operator(alg, 2, seed=1))

    def test_flipped_bracket_sign_fails(self):
        alg = random_structure_algebra(seed=7)
        delta = random_operator(alg, 1, seed=8)
        reports = check_general_identities(alg, delta, samples=60, signs=PhiSigns(bracket=-1))
        self.assertFalse(all(r.passed for r in reports))


class TestDerivations(unittest.TestCase):
    def test_odd_derivative_commuting_with_delta(self):
        inst = classical_bv_instance(2, 4)
        report = check_d_derivation(inst, odd_derivative(inst.alg, 0), zero_operator(0), samples=30)
        self.assertTrue(report.passed, report.to_dict())

    def test_delta_is_not_a_derivation(self):
        inst = classical_bv_instance(2, 4)
        with self.assertRaises(PreconditionError) as ctx:
            check_d_derivation(inst, inst.delta, zero_operator(0))
        self.assertEqual(ctx.exception.flag, "d_derivation")

    def test_euler_example(self):
        inst, D, L = euler_dbva_example(6)
        report = check_d_derivation(inst, D, L, samples=30)
        self.assertTrue(report.passed, report.to_dict())


class TestDifferentialBV(unittest.TestCase):
    def setUp(self):
        self.inst, self.D, self.L = euler_dbva_example(5)

    def test_axioms_and_cohomology(self):
        reports, table = verify_dbva(self.inst, self.D, self.L, max_weight=5)
        for report in reports:
            self.assertTrue(report.passed, report.to_dict())
        names = [r.name for r in reports]
        self.assertIn("induced-product-well-defined", names)
        self.assertIn("induced-bracket-well-defined", names)
        self.assertTrue(table.passed)
        cohomology = {row["weight"]: row["cohomology"] for row in table.rows}
        self.assertEqual(cohomology["0"], 1)
        self.assertTrue(all(v == 0 for k, v in cohomology.items() if k != "0"))

    def test_truncated_top_weight_is_noticed(self):
        reports, table = verify_dbva(self.inst, self.D, self.L)
        self.assertFalse(table.passed)

    def test_weight_zero_representative(self):
        spaces = eigenspaces(self.L, self.inst.alg.basis())
        self.assertEqual(len(cohomology_representatives(self.D, spaces[0])), 1)

    def test_acyclic_representatives(self):
        alg = PolynomialSuperalgebra(0, 1)
        self.assertEqual(cohomology_representatives(odd_derivative(alg, 0), alg.basis()), [])
        self.assertEqual(len(cohomology_representatives(zero_operator(1), alg.basis())), 2)

    def test_induced_product(self):
        words = [w for w in self.inst.alg.basis() if self.inst.alg.word_size(w) <= 3]
        for report in check_induced_product(self.inst, self.D, words):
            self.assertTrue(report.passed, report.to_dict())

    def test_induced_product_skips_products_over_the_cap(self):
        reports = check_induced_product(self.inst, self.D, self.inst.alg.basis())
        for report in reports:
            self.assertTrue(report.passed, report.to_dict())
            self.assertGreater(report.details["skipped_over_cap"], 0)
            self.assertGreater(report.samples, 0)
