# Unit tests for Lie algebra complexes.
import unittest

from base.enums import CheckStatus, ComplexCase, ModuleKind
from base.errors import AlgebraError, ConsistencyError, PreconditionError
from base.operators import identity_operator
from lie.checks import (
    boundary_factorization_check,
    cartan_identity_check,
    check_boundary_order,
    check_bracket_sign,
    check_rho_derivation,
    iota_epsilon_bv_check,
    lie_leibniz_check,
)
from lie.clifford import EPS, IOTA, CliffordElement, clifford_normalize
from lie.complexes import build_complex, chevalley_boundary, chevalley_coboundary, complex_operator
from lie.data import LieAlgebraData, abelian, nonabelian_2d, sl2
from lie.homology import homology, homology_dimensions, require_square_zero
from lie.weil import invariant_dimensions, weil_prime_homology


def corrupted_sl2() -> LieAlgebraData:
    return LieAlgebraData(
        ["e", "f", "h"],
        {(0, 1): {2: 1}, (2, 0): {0: -2}, (2, 1): {1: -2}},
        name="sl2-corrupted",
        validate=False,
    )


class TestLieAlgebraData(unittest.TestCase):
    def test_sl2_brackets(self):
        lie = sl2()
        self.assertEqual(lie.bracket_basis(0, 1), {2: 1})
        self.assertEqual(lie.bracket_basis(1, 0), {2: -1})
        self.assertEqual(lie.bracket({0: 1}, {2: 1}), {0: -2})
        self.assertFalse(lie.is_abelian)

    def test_jacobi_failure(self):
        with self.assertRaises(AlgebraError):
            LieAlgebraData(["e", "f", "h"], {(0, 1): {2: 1}, (2, 0): {0: -2}, (2, 1): {1: -2}})

    def test_conflicting_entries(self):
        with self.assertRaises(AlgebraError):
            LieAlgebraData(["x", "y"], {(0, 1): {1: 1}, (1, 0): {1: 1}})

    def test_from_triples(self):
        lie = LieAlgebraData.from_triples(["x", "y"], [(0, 1, 1, 1)])
        self.assertEqual(lie.triples(), nonabelian_2d().triples())

    def test_leibniz(self):
        self.assertTrue(lie_leibniz_check(sl2()).passed)
        report = lie_leibniz_check(corrupted_sl2())
        self.assertEqual(report.status, CheckStatus.FAIL)
        self.assertIsNotNone(report.counterexample)


class TestClifford(unittest.TestCase):
    def test_anticommutator(self):
        element = CliffordElement.letter(EPS, 0) * CliffordElement.letter(IOTA, 0)
        normal = clifford_normalize(element, ComplexCase.HOMOLOGY)
        expected = CliffordElement({((IOTA, 0), (EPS, 0)): -1, (): 1})
        self.assertEqual(normal, expected)

    def test_strategies_agree(self):
        element = (
            CliffordElement.letter(EPS, 1) * CliffordElement.letter(IOTA, 0)
            * CliffordElement.letter(EPS, 0) * CliffordElement.letter(IOTA, 1)
        ) + CliffordElement.letter(EPS, 2) * CliffordElement.letter(EPS, 1) * CliffordElement.letter(IOTA, 2)
        for case in ComplexCase:
            self.assertEqual(
                clifford_normalize(element, case, "leftmost"),
                clifford_normalize(element, case, "rightmost"),
            )

    def test_squares_vanish(self):
        element = CliffordElement.letter(IOTA, 1) * CliffordElement.letter(IOTA, 1)
        self.assertTrue(clifford_normalize(element, ComplexCase.COHOMOLOGY).is_zero())

    def test_unknown_strategy(self):
        with self.assertRaises(ValueError):
            clifford_normalize(CliffordElement(), ComplexCase.HOMOLOGY, "random")


class TestHomology(unittest.TestCase):
    def dims(self, lie, case):
        spec = build_complex(lie, case)
        report = homology(complex_operator(spec), spec.alg.basis())
        return [d for _, d in sorted(homology_dimensions(report).items())]

    def test_sl2(self):
        self.assertEqual(self.dims(sl2(), ComplexCase.HOMOLOGY), [1, 0, 0, 1])
        self.assertEqual(self.dims(sl2(), ComplexCase.COHOMOLOGY), [1, 0, 0, 1])

    def test_abelian(self):
        self.assertEqual(self.dims(abelian(2), ComplexCase.HOMOLOGY), [1, 2, 1])

    def test_aff1(self):
        self.assertEqual(self.dims(nonabelian_2d(), ComplexCase.HOMOLOGY), [1, 1, 0])

    def test_boundary_on_generators(self):
        spec = build_complex(sl2(), ComplexCase.HOMOLOGY)
        g = spec.alg.generator_map()
        boundary = chevalley_boundary(spec)
        self.assertEqual(boundary(spec.alg.multiply(g["e"], g["f"])), g["h"])

    def test_wrong_case(self):
        spec = build_complex(sl2(), ComplexCase.COHOMOLOGY)
        with self.assertRaises(PreconditionError):
            chevalley_boundary(spec)
        with self.assertRaises(PreconditionError):
            chevalley_coboundary(build_complex(sl2(), ComplexCase.HOMOLOGY))

    def test_rejects_non_square_zero(self):
        spec = build_complex(corrupted_sl2(), ComplexCase.HOMOLOGY)
        with self.assertRaises(ConsistencyError):
            require_square_zero(complex_operator(spec), spec.alg.basis())

    def test_identity_is_not_a_differential(self):
        spec = build_complex(abelian(2), ComplexCase.HOMOLOGY)
        with self.assertRaises(ConsistencyError):
            homology(identity_operator(), spec.alg.basis())


class TestOperatorIdentities(unittest.TestCase):
    def test_cartan(self):
        for lie in (sl2(), abelian(2), nonabelian_2d()):
            for case in ComplexCase:
                report = cartan_identity_check(lie, build_complex(lie, case))
                self.assertTrue(report.passed, report.to_dict())

    def test_cartan_with_symmetric_module(self):
        spec = build_complex(sl2(), ComplexCase.HOMOLOGY, ModuleKind.SYMMETRIC, 1)
        self.assertTrue(cartan_identity_check(sl2(), spec).passed)

    def test_boundary_order(self):
        lie = sl2()
        report = check_boundary_order(lie, build_complex(lie, ComplexCase.HOMOLOGY))
        self.assertEqual(report.order, 2)
        self.assertTrue(report.passed, report.to_dict())
        self.assertIn(2, report.witnesses)
        self.assertEqual(check_boundary_order(lie, build_complex(lie, ComplexCase.COHOMOLOGY)).order, 1)
        flat = abelian(2)
        self.assertEqual(check_boundary_order(flat, build_complex(flat, ComplexCase.HOMOLOGY)).order, 0)

    def test_factorization_with_symmetric_module(self):
        spec = build_complex(sl2(), ComplexCase.HOMOLOGY, ModuleKind.SYMMETRIC, 2)
        self.assertTrue(boundary_factorization_check(spec).passed)

    def test_iota_epsilon(self):
        lie = sl2()
        for case in ComplexCase:
            reports = iota_epsilon_bv_check(lie, build_complex(lie, case))
            self.assertEqual(len(reports), 3)
            for report in reports:
                self.assertTrue(report.passed, report.to_dict())
                self.assertTrue(report.asserted)

    def test_iota_epsilon_not_asserted_for_solvable(self):
        lie = nonabelian_2d()
        reports = iota_epsilon_bv_check(lie, build_complex(lie, ComplexCase.HOMOLOGY))
        self.assertFalse(reports[2].asserted)

    def test_rho_and_bracket(self):
        lie = sl2()
        spec = build_complex(lie, ComplexCase.HOMOLOGY)
        self.assertTrue(check_rho_derivation(lie, spec).passed)
        self.assertTrue(check_bracket_sign(lie, spec).passed)


class TestWeil(unittest.TestCase):
    def test_invariants(self):
        dims = invariant_dimensions(sl2(), 2)
        self.assertEqual(dims["symmetric"], {0: 1, 1: 0, 2: 1})
        self.assertEqual(dims["exterior"], {0: 1, 1: 0, 2: 0, 3: 1})

    def test_sl2_cap_two(self):
        report = weil_prime_homology(sl2(), 2)
        self.assertTrue(report.passed, report.rows)
        by_grade = {tuple(row["grade"]): row["homology"] for row in report.rows}
        self.assertEqual([by_grade[(2, q)] for q in range(4)], [1, 0, 0, 1])
        self.assertEqual([by_grade[(1, q)] for q in range(4)], [0, 0, 0, 0])
        self.assertEqual(report.details["order"], 2)

    def test_cap_zero_warns(self):
        with self.assertLogs("lie.weil", level="WARNING"):
            report = weil_prime_homology(sl2(), 0)
        self.assertEqual([row["homology"] for row in report.rows], [1, 0, 0, 1])

    def test_abelian(self):
        report = weil_prime_homology(abelian(2), 1)
        self.assertTrue(report.passed)
        self.assertEqual(sum(row["homology"] for row in report.rows), 3 * 4)


if __name__ == '__main__':
    unittest.main()
