"""Operator identities on Chevalley-Eilenberg complexes."""
import itertools
import logging
from typing import List

from base.elements import Element
from base.enums import CheckStatus, ComplexCase
from base.linalg import image, in_span, kernel
from base.operators import LinOp, sum_operators, supercommutator
from base.reports import IdentityReport, OrderReport, ResidualCollector
from bv.bracket import bv_bracket
from bv.identities import check_leibniz
from diffops.order import classify_order
from diffops.phi import phi_form

from .clifford import EPS, IOTA
from .complexes import (
    ComplexSpec,
    complex_operator,
    letter_operator,
    module_action,
    rho_operator,
    theta_operator,
)
from .data import LieAlgebraData
from .homology import symmetric_degree

logger = logging.getLogger(__name__)


def _basis_vector(i: int) -> dict:
    return {i: 1}


def cartan_identity_check(lie: LieAlgebraData, spec: ComplexSpec) -> IdentityReport:
    """[D, iota(x)] = theta(x) and [D, theta(x)] = 0 for every basis vector x.

    Both sides are compared on every basis word of the chain algebra.
    """
    D = complex_operator(spec)
    words = spec.alg.basis()
    collector = ResidualCollector(f"cartan-identity[{lie.name}]")
    for i in range(lie.dim):
        contraction = letter_operator(spec, (IOTA, i))
        theta = theta_operator(spec, _basis_vector(i))
        homotopy = supercommutator(D, contraction)
        flat = supercommutator(D, theta)
        for word in words:
            source = Element.from_word(word)
            collector.record((source,), homotopy.on_word(word), theta.on_word(word))
            collector.record((source,), flat.on_word(word), Element())
    return collector.report({"case": spec.case.value, "module": spec.module.value, "exhaustive": True})


def expected_boundary_order(lie: LieAlgebraData, case: ComplexCase) -> int:
    if lie.is_abelian:
        return 0
    return 2 if case == ComplexCase.HOMOLOGY else 1


def boundary_factorization_check(spec: ComplexSpec) -> IdentityReport:
    """The differential as sum_i (pi(e_i) + rho(e_i)/2) eps(e_i') (homology) or
    sum_i eps(e_i') (pi(e_i) + rho(e_i)/2) (cohomology)."""
    D = complex_operator(spec)
    pieces: List[LinOp] = []
    for i in range(spec.lie.dim):
        action = module_action(spec, i) + rho_operator(spec, _basis_vector(i)).scaled("1/2")
        eps = letter_operator(spec, (EPS, i))
        if spec.case == ComplexCase.HOMOLOGY:
            pieces.append(action.compose(eps))
        else:
            pieces.append(eps.compose(action))
    factored = sum_operators(pieces, D.degree, "factored")
    collector = ResidualCollector(f"differential-factorization[{spec.lie.name}]")
    for word in spec.alg.basis():
        collector.record((Element.from_word(word),), D.on_word(word), factored.on_word(word))
    return collector.report({"case": spec.case.value, "exhaustive": True})


def check_boundary_order(
    lie: LieAlgebraData,
    spec: ComplexSpec,
    r_max: int = 3,
    limit: int = 4000,
    seed: int = 0,
) -> OrderReport:
    """Classify the order of the (co)boundary and check its factorization.

    The coboundary is a derivation (order 1); the boundary is a genuine
    second order operator unless g is abelian, where it vanishes.
    """
    D = complex_operator(spec)
    report = classify_order(
        spec.alg,
        D,
        r_max,
        domain=spec.alg.basis(),
        limit=limit,
        seed=seed,
        expected=expected_boundary_order(lie, spec.case),
    )
    factorization = boundary_factorization_check(spec)
    report.details["factorization"] = factorization.status.value
    if not factorization.passed:
        report.status = CheckStatus.FAIL
        report.details["factorization_counterexample"] = factorization.counterexample.to_dict()
    return report


def _exterior_words(spec: ComplexSpec):
    return [w for w in spec.alg.basis() if symmetric_degree(w) == 0]


def invariant_cycles(spec: ComplexSpec) -> List[Element]:
    """Exterior (co)cycles killed by every theta(x)."""
    words = _exterior_words(spec)
    ops = [complex_operator(spec)] + [theta_operator(spec, _basis_vector(i)) for i in range(spec.lie.dim)]
    return kernel(ops, words)


def iota_epsilon_bv_check(lie: LieAlgebraData, spec: ComplexSpec) -> List[IdentityReport]:
    """Square-zero and derivation properties of iota and eps, and their
    triviality on (co)homology.

    The contraction letter (eps on chains, iota on cochains) must be a
    derivation of the exterior algebra. The multiplication letter sends each
    invariant (co)cycle either outside the (co)cycles or into the
    (co)boundaries; the latter is asserted only for semisimple g.
    """
    alg = spec.alg
    words = _exterior_words(spec)
    elements = [Element.from_word(w) for w in words]
    square = ResidualCollector(f"iota-eps-square-zero[{lie.name}]")
    derivation = ResidualCollector(f"contraction-derivation[{lie.name}]")
    trivial = ResidualCollector(f"trivial-on-homology[{lie.name}]")
    contraction_kind = EPS if spec.case == ComplexCase.HOMOLOGY else IOTA
    multiplication_kind = IOTA if contraction_kind == EPS else EPS
    for i in range(lie.dim):
        for kind in (IOTA, EPS):
            op = letter_operator(spec, (kind, i))
            for source in elements:
                square.record((source,), op.apply(op.apply(source)), Element())
        contraction = letter_operator(spec, (contraction_kind, i))
        for a, b in itertools.product(elements, repeat=2):
            derivation.record((a, b), phi_form(alg, contraction, [a, b]), Element())

    D = complex_operator(spec)
    boundaries = image(D, words)
    not_closed = 0
    for cycle in invariant_cycles(spec):
        for i in range(lie.dim):
            value = letter_operator(spec, (multiplication_kind, i)).apply(cycle)
            if not D.apply(value).is_zero():
                not_closed += 1
                continue
            exact = in_span(value, boundaries)
            trivial.record((cycle,), value if not exact else Element(), Element())
    logger.debug(f"{lie.name}: {not_closed} images of invariant cycles are not closed")
    return [
        square.report({"exhaustive": True}),
        derivation.report({"letter": contraction_kind, "exhaustive": True}),
        trivial.report({"letter": multiplication_kind, "not_closed": not_closed}, asserted=lie.semisimple),
    ]


def check_rho_derivation(lie: LieAlgebraData, spec: ComplexSpec) -> IdentityReport:
    """rho(x) acts on the exterior algebra by even derivations."""
    elements = [Element.from_word(w) for w in _exterior_words(spec)]
    collector = ResidualCollector(f"rho-derivation[{lie.name}]")
    for i in range(lie.dim):
        rho = rho_operator(spec, _basis_vector(i))
        for a, b in itertools.product(elements, repeat=2):
            collector.record((a, b), phi_form(spec.alg, rho, [a, b]), Element())
    return collector.report({"exhaustive": True})


def check_bracket_sign(lie: LieAlgebraData, spec: ComplexSpec) -> IdentityReport:
    """The bracket generated by the boundary on generators is {x, y} = -[x, y]."""
    if spec.case != ComplexCase.HOMOLOGY:
        raise ValueError("the generated bracket is checked on the homology complex")
    D = complex_operator(spec)
    alg = spec.alg
    collector = ResidualCollector(f"generated-bracket[{lie.name}]")
    for i, j in itertools.product(range(lie.dim), repeat=2):
        x, y = alg.odd_generator(i), alg.odd_generator(j)
        expected = Element()
        for k, c in lie.bracket_basis(i, j).items():
            expected = expected + alg.odd_generator(k).scale(-c)
        collector.record((x, y), bv_bracket(alg, D, x, y), expected)
    return collector.report({"exhaustive": True})


def lie_leibniz_check(lie: LieAlgebraData, samples: int = 200, seed: int = 0) -> IdentityReport:
    """Jacobi identity of the Lie bracket in Leibniz form (no degree shift)."""
    alg = lie.as_algebra()
    pool = [alg.basis_element(i) for i in range(lie.dim)]
    return check_leibniz(alg.multiply, pool, samples, seed, shift=0, name=f"leibniz[{lie.name}]")
