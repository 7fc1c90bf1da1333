# Unit tests for the quantum master equation checks.
import unittest
from fractions import Fraction

from base.enums import CheckStatus
from base.errors import HomogeneityError, PreconditionError
from base.operators import odd_derivative
from base.random_gen import random_operator
from bv.classical import classical_bv_algebra, classical_bv_instance
from bv.instance import make_gbva_instance
from master.candidates import MasterCandidate, nilpotent_powers, quartic_fixture
from master.deformation import check_deformation, deform_delta
from master.lemmas import check_power_lemmas, classical_master, exp_check, phi_expansion_check
from master.search import check_master_tower, search_master_solutions
from master.weights import check_weight_obstruction
from vosa.checks import bc_gbva_instance


def monomial(alg, exps, odds, coeff=1):
    return alg.monomial(exps, odds, coeff)


def linear_plus_cubic(alg):
    """x1 + 2 x2 t1 t2."""
    return monomial(alg, [1, 0], ()) + monomial(alg, [0, 1], (0, 1), 2)


class TestCandidates(unittest.TestCase):
    def setUp(self):
        self.inst, self.W, self.lam = quartic_fixture()

    def test_fixture_solves(self):
        self.assertEqual(self.lam, -2)
        cand = MasterCandidate(self.W, self.lam, self.inst)
        self.assertTrue(cand.holds())
        self.assertFalse(cand.delta_w().is_zero())

    def test_rescaled_fixture(self):
        inst, W, lam = quartic_fixture(2, 1, 1)
        self.assertEqual(lam, 4)
        self.assertTrue(MasterCandidate(W, lam, inst).holds())

    def test_wrong_lambda(self):
        self.assertFalse(MasterCandidate(self.W, 3, self.inst).holds())

    def test_rejects_odd(self):
        g = self.inst.alg.generator_map()
        with self.assertRaises(HomogeneityError):
            MasterCandidate(g["t1"], 1, self.inst)

    def test_nilpotent_powers(self):
        powers = nilpotent_powers(self.inst.alg, self.W)
        self.assertEqual(len(powers), 3)
        with self.assertRaises(PreconditionError) as ctx:
            nilpotent_powers(self.inst.alg, self.inst.alg.generator_map()["x1"])
        self.assertEqual(ctx.exception.flag, "nilpotent")


class TestLemmas(unittest.TestCase):
    def setUp(self):
        self.inst, self.W, self.lam = quartic_fixture()
        self.cand = MasterCandidate(self.W, self.lam, self.inst)

    def test_power_lemmas(self):
        reports = check_power_lemmas(self.cand, 5)
        self.assertEqual([r.name for r in reports], ["master-equation", "bracket-power-lemma", "delta-power-lemma"])
        for report in reports:
            self.assertTrue(report.passed, report.to_dict())
        self.assertEqual(reports[1].details["k_checked"], [1, 2, 3, 4, 5])

    def test_power_lemmas_for_a_closed_element(self):
        inst = classical_bv_instance(2, 2)
        W = monomial(inst.alg, [0, 0], (0, 1))
        for report in check_power_lemmas(MasterCandidate(W, 3, inst), 4):
            self.assertTrue(report.passed, report.to_dict())

    def test_power_lemmas_refused(self):
        reports = check_power_lemmas(MasterCandidate(self.W, 1, self.inst), 3)
        self.assertEqual(reports[0].status, CheckStatus.FAIL)
        self.assertIsNotNone(reports[0].counterexample)
        self.assertEqual([r.status for r in reports[1:]], [CheckStatus.REFUSED] * 2)

    def test_exp_identity(self):
        report = exp_check(self.cand)
        self.assertTrue(report.passed, report.to_dict())
        self.assertTrue(report.details["closed"])
        rescaled = exp_check(self.cand, 2)
        self.assertTrue(rescaled.passed, rescaled.to_dict())
        self.assertFalse(rescaled.details["closed"])
        self.assertEqual(rescaled.details["mu"], "-4")

    def test_exp_of_closed_element(self):
        inst = classical_bv_instance(2, 2)
        W = monomial(inst.alg, [0, 0], (0, 1))
        report = exp_check(MasterCandidate(W, 0, inst))
        self.assertTrue(report.passed)
        self.assertEqual(report.details["terms"], 2)

    def test_exp_refuses_polynomials(self):
        inst = classical_bv_instance(1, 4)
        W = monomial(inst.alg, [2], ())
        report = exp_check(MasterCandidate(W, 0, inst))
        self.assertEqual(report.status, CheckStatus.REFUSED)
        self.assertEqual(report.details["flag"], "nilpotent")

    def test_phi_expansion_second_order(self):
        alg, delta = classical_bv_algebra(2, 8)
        W = monomial(alg, [1, 1], ()) + monomial(alg, [0, 0], (0, 1))
        report = phi_expansion_check(alg, delta, W)
        self.assertTrue(report.passed, report.to_dict())
        self.assertEqual(report.details["k_checked"], [1, 2, 3])
        self.assertTrue(report.details["second_order"])

    def test_phi_expansion_stops_below_the_cap(self):
        alg, delta = classical_bv_algebra(2, 3)
        W = linear_plus_cubic(alg)
        report = phi_expansion_check(alg, delta, W, k_max=4, order_limit=200)
        self.assertTrue(report.passed, report.to_dict())
        self.assertEqual(report.details["k_checked"], [1, 2])
        self.assertIsNone(report.details["second_order"])

        alg, delta = classical_bv_algebra(2, 5)
        W = linear_plus_cubic(alg)
        report = phi_expansion_check(alg, delta, W, k_max=4, order_limit=2000)
        self.assertTrue(report.passed, report.to_dict())
        self.assertEqual(report.details["k_checked"], [1, 2, 3, 4])
        self.assertTrue(report.details["second_order"])

    def test_phi_expansion_random_operator(self):
        for cap in (3, 5):
            alg, _ = classical_bv_algebra(2, cap)
            W = linear_plus_cubic(alg)
            for seed in range(3):
                delta = random_operator(alg, 1, seed=seed)
                report = phi_expansion_check(alg, delta, W, k_max=4, order_limit=2000)
                self.assertTrue(report.passed, report.to_dict())

    def test_phi_expansion_rejects(self):
        alg, delta = classical_bv_algebra(2, 2)
        with self.assertRaises(HomogeneityError):
            phi_expansion_check(alg, delta, alg.generator_map()["t1"])
        with self.assertRaises(PreconditionError):
            phi_expansion_check(alg, delta.compose(delta), alg.unit())

    def test_classical_master(self):
        inst, _, _ = quartic_fixture()
        alg = inst.alg
        S = monomial(alg, [0, 0, 1, 0], (0, 1))
        self.assertTrue(classical_master(inst, S).passed)
        S2 = S + monomial(alg, [1, 0, 0, 0], (2, 3))
        self.assertEqual(classical_master(inst, S2).status, CheckStatus.FAIL)


class TestDeformation(unittest.TestCase):
    def test_closed_element(self):
        inst = classical_bv_instance(2, 2)
        a = monomial(inst.alg, [0, 0], (0, 1))
        deformed = deform_delta(inst, a)
        self.assertEqual(deformed.parity, 1)
        self.assertEqual(deformed(inst.alg.generator_map()["x1"]), inst.alg.generator_map()["t2"])
        for report in check_deformation(inst, a, samples=40, limit=500):
            self.assertTrue(report.passed, report.to_dict())

    def test_zero_changes_nothing(self):
        inst = classical_bv_instance(1, 2)
        deformed = deform_delta(inst, inst.alg.unit().scale(0))
        for word in inst.alg.basis():
            self.assertEqual(deformed.on_word(word), inst.delta.on_word(word))

    def test_master_solution_deforms(self):
        inst, W, lam = quartic_fixture()
        self.assertEqual(lam, -2)
        reports = check_deformation(inst, W, samples=30, limit=300)
        for report in reports:
            self.assertTrue(report.passed, report.to_dict())

    def test_non_solution_is_skipped(self):
        inst = classical_bv_instance(2, 2)
        a = monomial(inst.alg, [1, 0], (0, 1))
        reports = check_deformation(inst, a)
        self.assertEqual(reports[0].status, CheckStatus.FAIL)
        self.assertEqual([r.status for r in reports[1:]], [CheckStatus.REFUSED] * 3)

    def test_odd_element_rejected(self):
        inst = classical_bv_instance(1, 2)
        with self.assertRaises(HomogeneityError):
            deform_delta(inst, inst.alg.generator_map()["t1"])

    def test_differential_survives(self):
        inst = classical_bv_instance(1, 4)
        D = odd_derivative(inst.alg, 0)
        a = monomial(inst.alg, [2], ())
        reports = check_deformation(inst, a, D=D, samples=20, limit=200)
        self.assertEqual(reports[-1].name, "deformed-differential")
        for report in reports:
            self.assertTrue(report.passed, report.to_dict())

    def test_differential_must_kill_a(self):
        inst = classical_bv_instance(2, 2)
        a = monomial(inst.alg, [0, 0], (0, 1))
        reports = check_deformation(inst, a, D=odd_derivative(inst.alg, 0), samples=20, limit=200)
        self.assertEqual(reports[-1].status, CheckStatus.REFUSED)
        self.assertEqual(reports[-1].details["flag"], "d_kills_a")


class TestWeights(unittest.TestCase):
    def setUp(self):
        self.inst = bc_gbva_instance(1)
        self.alg = self.inst.alg

    def test_weight_two_is_obstructed(self):
        W = self.alg.state([("b", -2), ("c", 0)])
        self.assertEqual(self.inst.delta(W), -self.alg.field_state("b"))
        report = check_weight_obstruction(self.inst, W, 1)
        self.assertTrue(report.passed, report.to_dict())
        self.assertTrue(report.details["obstructed"])
        self.assertFalse(report.details["solves"])
        self.assertEqual(report.details["bracket_weight"], "4")

    def test_weight_one(self):
        W = self.alg.state([("b", -2), ("c", 1)])
        report = check_weight_obstruction(self.inst, W, 1)
        self.assertTrue(report.passed, report.to_dict())
        self.assertTrue(report.details["delta_vanishes"])

    def test_weight_zero(self):
        W = self.alg.state([("c", -1), ("c", 1)])
        report = check_weight_obstruction(self.inst, W, 1)
        self.assertTrue(report.passed, report.to_dict())
        self.assertFalse(report.details["obstructed"])

    def test_rejects_odd_and_zero(self):
        with self.assertRaises(HomogeneityError):
            check_weight_obstruction(self.inst, self.alg.field_state("c"), 1)
        with self.assertRaises(HomogeneityError):
            check_weight_obstruction(self.inst, self.alg.vacuum().scale(0), 1)


class TestSearch(unittest.TestCase):
    def setUp(self):
        self.inst, _, _ = quartic_fixture()
        alg = self.inst.alg
        self.words = [
            monomial(alg, [0, 0, 1, 0], (0, 1)),
            monomial(alg, [1, 0, 0, 0], (2, 3)),
            monomial(alg, [1, 0, 1, 0], (0, 1, 2, 3)),
        ]

    def test_recovers_the_family(self):
        found = search_master_solutions(self.inst, self.words)
        self.assertEqual(len(found), 4 * 25)
        for W, lam in found:
            a, b, e = (W.coefficient(w.words()[0]) for w in self.words)
            self.assertEqual(lam, 2 * a * b / e)
        fixture = self.words[0] + self.words[1] - self.words[2]
        self.assertIn((fixture, Fraction(-2)), found)

    def test_tower(self):
        W = self.words[0] + self.words[1] - self.words[2]
        zero = W.scale(0)
        for report in check_master_tower(self.inst, zero, [W], -2):
            self.assertTrue(report.passed, report.to_dict())
        for report in check_master_tower(self.inst, self.words[0], [], 5):
            self.assertTrue(report.passed, report.to_dict())

    def test_tower_failure(self):
        expansion, tower = check_master_tower(self.inst, self.words[0], [self.words[1]], 1)
        self.assertTrue(expansion.passed, expansion.to_dict())
        self.assertEqual(tower.status, CheckStatus.FAIL)


if __name__ == '__main__':
    unittest.main()
