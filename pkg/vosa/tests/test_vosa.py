# Unit tests for the bc vertex operator superalgebra.
import unittest

from base.enums import CheckStatus
from base.errors import AlgebraError
from bv.identities import check_d_derivation, check_gbva_identities
from vosa.checks import (
    bc_gbva_instance,
    capped_tuples,
    check_anticommutators,
    check_g0_square_identity,
    check_l0_derivation,
    check_mode_order,
    check_mode_order_laws,
    check_phi2_expansion,
    check_primary_field,
    check_residue_derivation,
    commutator_check,
)
from vosa.fock import BcVertexAlgebra, parse_modes
from vosa.modes import bv_operator, generator_operator, l0_operator, virasoro_operator


class TestFockSpace(unittest.TestCase):
    def setUp(self):
        self.alg = BcVertexAlgebra(2)
        self.b = self.alg.field_state("b")
        self.c = self.alg.field_state("c")
        self.vac = self.alg.vacuum()

    def test_vacuum_conditions(self):
        for k in range(-1, 4):
            self.assertTrue(self.alg.generator_mode("b", k, self.vac).is_zero())
        for k in range(2, 5):
            self.assertTrue(self.alg.generator_mode("c", k, self.vac).is_zero())
        self.assertEqual(self.alg.generator_mode("b", -2, self.vac), self.b)

    def test_wick_products(self):
        wick = self.alg.wick
        self.assertTrue(wick(self.b, self.b).is_zero())
        self.assertEqual(wick(self.b, self.c), self.alg.state([("b", -2), ("c", 1)]))
        self.assertEqual(wick(self.c, self.b), -wick(self.b, self.c))

    def test_vacuum_is_the_unit(self):
        for word in self.alg.basis():
            x = self.alg.state(word.key)
            self.assertEqual(self.alg.wick(self.vac, x), x)
            self.assertEqual(self.alg.wick(x, self.vac), x)

    def test_modes_on_vacuum(self):
        for u in (self.b, self.c):
            self.assertEqual(self.alg.mode_apply(u, -1, self.vac), u)
            for n in range(3):
                self.assertTrue(self.alg.mode_apply(u, n, self.vac).is_zero())

    def test_grading(self):
        state = self.alg.state([("b", -2), ("c", 1)])
        self.assertEqual(state.degree(), 0)
        self.assertEqual(state.weight(), 1)
        self.assertEqual(self.c.degree(), 1)
        self.assertEqual(self.c.weight(), -1)
        self.assertTrue(all(w.weight <= 2 for w in self.alg.basis()))

    def test_state_reorders_with_sign(self):
        self.assertEqual(self.alg.state([("c", 1), ("b", -2)]), -self.alg.state([("b", -2), ("c", 1)]))
        self.assertTrue(self.alg.state([("c", 0), ("c", 0)]).is_zero())
        with self.assertRaises(AlgebraError):
            self.alg.state([("b", 0)])

    def test_anticommutators(self):
        report = check_anticommutators(self.alg, range(-3, 4), weight_cap=1)
        self.assertTrue(report.passed, report.to_dict())

    def test_l0_reads_the_weight(self):
        L0, weight = virasoro_operator(self.alg, 0), l0_operator(self.alg)
        for word in self.alg.basis():
            self.assertEqual(L0.on_word(word), weight.on_word(word))

    def test_parse_modes(self):
        self.assertEqual(parse_modes("b(-2)c(1)|0>"), [("b", -2), ("c", 1)])
        self.assertEqual(parse_modes("|0>"), [])
        for bad in ("b(-2)", "x(1)|0>", "b(-2|0>", "b(z)|0>"):
            with self.assertRaises(AlgebraError):
                parse_modes(bad)


class TestModeIdentities(unittest.TestCase):
    def setUp(self):
        self.alg = BcVertexAlgebra(2)
        self.b = self.alg.field_state("b")
        self.c = self.alg.field_state("c")

    def test_primary_fields(self):
        self.assertTrue(check_primary_field(self.alg, self.b, 2, range(-2, 3), weight_cap=1).passed)
        self.assertTrue(check_primary_field(self.alg, self.c, -1, range(-2, 3), weight_cap=1).passed)

    def test_wrong_weight_fails(self):
        report = check_primary_field(self.alg, self.b, 1, range(-1, 2), weight_cap=1)
        self.assertEqual(report.status, CheckStatus.FAIL)

    def test_commutator_formula(self):
        for m, n in ((1, -1), (0, 0), (2, -2)):
            report = commutator_check(self.alg, self.b, m, self.c, n, weight_cap=1)
            self.assertTrue(report.passed, report.to_dict())
        state = self.alg.state([("b", -3), ("c", 1)])
        self.assertTrue(commutator_check(self.alg, state, 1, self.c, 0, weight_cap=1).passed)

    def test_bv_operator_has_order_two(self):
        report = check_mode_order(self.alg, self.b, 1)
        self.assertTrue(report.passed, report.to_dict())
        self.assertIsNotNone(report.details["witness"])

    def test_residue_mode_is_a_derivation(self):
        report = check_mode_order(self.alg, self.b, 0)
        self.assertTrue(report.passed, report.to_dict())
        self.assertIsNotNone(report.details["witness"])

    def test_negative_modes_multiply(self):
        for n in (-1, -2):
            self.assertTrue(check_mode_order(self.alg, self.c, n).passed)

    def test_phi2_expansion(self):
        for r in (1, 2):
            report = check_phi2_expansion(self.alg, self.b, r, weight_cap=1)
            self.assertTrue(report.passed, report.to_dict())
        with self.assertRaises(ValueError):
            check_phi2_expansion(self.alg, self.b, 0)

    def test_l0_derivation(self):
        for n in (-2, -1, 0, 1):
            self.assertTrue(check_l0_derivation(self.alg, n, weight_cap=1).passed)

    def test_residue_derivation(self):
        for u in (self.b, self.c):
            report = check_residue_derivation(self.alg, u, weight_cap=1)
            self.assertTrue(report.passed, report.to_dict())

    def test_g0_square(self):
        report = check_g0_square_identity(self.alg, weight_cap=1)
        self.assertTrue(report.passed, report.to_dict())
        self.assertEqual(report.details["primary"], "pass")

    def test_mode_order_laws(self):
        alg = BcVertexAlgebra(1)
        report = check_mode_order_laws(alg, alg.field_state("b"))
        self.assertTrue(report.passed, report.rows)
        self.assertFalse(report.details["composites_asserted"])
        brackets = [row for row in report.rows if row["check"] == "bracket"]
        self.assertTrue(brackets)
        self.assertTrue(all(row["ok"] and row["asserted"] for row in brackets), brackets)
        composites = [row for row in report.rows if row["check"] == "composite"]
        self.assertTrue(all(not row["asserted"] for row in composites))

    def test_capped_tuples(self):
        tuples, exhaustive = capped_tuples(self.alg, 2, weight_cap=0)
        self.assertTrue(exhaustive)
        self.assertTrue(all(sum(x.weight() for x in t) <= 0 for t in tuples))
        _, exhaustive = capped_tuples(self.alg, 3, limit=10)
        self.assertFalse(exhaustive)


class TestBcGbva(unittest.TestCase):
    def test_flags(self):
        inst = bc_gbva_instance(1)
        self.assertIsNone(inst.flags.failed())
        self.assertEqual(inst.delta.label, bv_operator(inst.alg).label)

    def test_identities(self):
        inst = bc_gbva_instance(1)
        for report in check_gbva_identities(inst, samples=40):
            self.assertTrue(report.passed, report.to_dict())

    def test_residue_of_b_preserves_the_bracket(self):
        inst = bc_gbva_instance(1)
        D = generator_operator(inst.alg, "b", -1)
        report = check_d_derivation(inst, D, samples=40)
        self.assertTrue(report.passed, report.to_dict())


if __name__ == '__main__':
    unittest.main()
