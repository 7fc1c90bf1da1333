"""Differential generalized BV algebras (Delta, D, L with [D, Delta] = L)."""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from base.elements import BasisWord, Element
from base.enums import CheckStatus
from base.errors import AlgebraError
from base.linalg import image, in_span, kernel
from base.operators import LinOp, diagonal_operator, even_derivative, left_multiplication, odd_derivative, supercommutator
from base.polynomial import PolynomialSuperalgebra
from base.reports import IdentityReport, ResidualCollector, TableReport

from .instance import GbvaInstance, make_gbva_instance

logger = logging.getLogger(__name__)


def eigenspaces(L: LinOp, words: Sequence[BasisWord]) -> Dict[Fraction, List[BasisWord]]:
    """Group basis words by their L-eigenvalue.

    Raises:
        AlgebraError: If some basis word is not an eigenvector of L
    """
    spaces: Dict[Fraction, List[BasisWord]] = {}
    for word in words:
        value = L.on_word(word)
        targets = value.words()
        if targets and targets != [word]:
            raise AlgebraError(f"basis word {word} is not an eigenvector of {L.label}", {"word": str(word)})
        spaces.setdefault(value.coefficient(word), []).append(word)
    return dict(sorted(spaces.items()))


def cohomology_by_weight(D: LinOp, spaces: Dict[Fraction, List[BasisWord]]) -> Dict[Fraction, Dict[str, object]]:
    """Cohomology of D on each (D-stable) eigenspace: cocycles and coboundaries."""
    result = {}
    for weight, words in spaces.items():
        cocycles = kernel([D], words)
        coboundaries = image(D, words)
        result[weight] = {
            "dimension": len(words),
            "cocycles": cocycles,
            "coboundaries": coboundaries,
            "cohomology": len(cocycles) - len(coboundaries),
        }
    return result


def cohomology_representatives(D: LinOp, words: Sequence[BasisWord]) -> List[Element]:
    """Cocycles whose classes form a basis of the cohomology on span(words)."""
    coboundaries = image(D, words)
    chosen: List[Element] = []
    for cocycle in kernel([D], words):
        if not in_span(cocycle, coboundaries + chosen):
            chosen.append(cocycle)
    return chosen


def verify_dbva(
    inst: GbvaInstance,
    D: LinOp,
    L: LinOp,
    max_weight: Optional[Fraction] = None,
) -> Tuple[List[IdentityReport], TableReport]:
    """Check the dGBVA axioms and the consequences for cohomology.

    The domain is the set of basis words with L-eigenvalue at most
    ``max_weight``; each eigenspace in it must be stable under D and Delta.

    Returns:
        Tuple: Identity reports and a per-weight cohomology table
    """
    alg, delta = inst.alg, inst.delta
    words = alg.basis()
    spaces = eigenspaces(L, words)
    if max_weight is not None:
        spaces = {w: s for w, s in spaces.items() if w <= max_weight}
    domain = [w for space in spaces.values() for w in space]

    anticommutator = ResidualCollector("d-delta-anticommutator")
    square = ResidualCollector("d-square-zero")
    l_commutes = ResidualCollector("l-commutes")
    d_delta = supercommutator(D, delta)
    l_d, l_delta = supercommutator(L, D), supercommutator(L, delta)
    for word in domain:
        e = Element.from_word(word)
        anticommutator.record((e,), d_delta.apply(e), L.apply(e))
        square.record((e,), D.apply(D.apply(e)), Element())
        l_commutes.record((e,), l_d.apply(e) + l_delta.apply(e), Element())
    unit_check = ResidualCollector("d-kills-unit")
    if alg.unit() is not None:
        unit_check.record((alg.unit(),), D.apply(alg.unit()), Element())

    table = cohomology_by_weight(D, spaces)
    concentrated = ResidualCollector("cohomology-in-weight-zero")
    contraction = ResidualCollector("delta-contracts-nonzero-weights")
    descends = ResidualCollector("delta-preserves-weight-zero-cohomology")
    rows = []
    for weight, data in table.items():
        rows.append({"weight": str(weight), "dimension": data["dimension"], "cohomology": data["cohomology"]})
        if weight != 0:
            representatives = cohomology_representatives(D, spaces[weight]) if data["cohomology"] else []
            if not representatives:
                concentrated.record((), Element(), Element())
            for rep in representatives:
                concentrated.record((rep,), rep, Element())
            for a in data["cocycles"]:
                contraction.record((a,), D.apply(delta.apply(a)), a.scale(weight))
        else:
            for a in data["cocycles"]:
                da = delta.apply(a)
                descends.record((a,), D.apply(da), Element())
            for b in data["coboundaries"]:
                image_b = delta.apply(b)
                # Delta of a coboundary must again be a coboundary
                outside = Element() if in_span(image_b, data["coboundaries"]) else image_b
                descends.record((b,), outside, Element())
    reports = [
        r.report() for r in (anticommutator, square, l_commutes, unit_check, concentrated, contraction, descends)
    ]
    reports.extend(check_induced_product(inst, D, domain))
    status = CheckStatus.PASS if all(r.passed for r in reports) else CheckStatus.FAIL
    return reports, TableReport("dgbva-cohomology", status, rows, {"domain": len(domain)})


def check_induced_product(
    inst: GbvaInstance,
    D: LinOp,
    words: Sequence[BasisWord],
) -> List[IdentityReport]:
    """Product and bracket of cocycles do not depend on the chosen representative.

    For cocycles a, b and a coboundary Dc the differences (a + Dc) b - ab and
    {a + Dc, b} - {a, b} must be coboundaries. On a truncated algebra only
    triples whose combined load stays below the cap are compared, so that
    neither product nor preimage is cut off.
    """
    alg = inst.alg
    words = list(words)
    cocycles = kernel([D], words)
    coboundaries = image(D, words)
    all_coboundaries = image(D, alg.basis())
    product = ResidualCollector("induced-product-well-defined")
    bracket = ResidualCollector("induced-bracket-well-defined")
    bound = None if alg.degree_cap is None else alg.degree_cap - 1
    skipped = 0
    for a in cocycles:
        for b in cocycles:
            for shift in coboundaries[:4]:
                if bound is not None and _load(alg, a) + _load(alg, b) + _load(alg, shift) > bound:
                    skipped += 1
                    continue
                moved = a + shift
                for collector, value in (
                    (product, alg.multiply(moved, b) - alg.multiply(a, b)),
                    (bracket, _bracket_parts(inst, moved, b) - _bracket_parts(inst, a, b)),
                ):
                    outside = Element() if in_span(value, all_coboundaries) else value
                    collector.record((a, b, shift), outside, Element())
    if skipped:
        logger.debug("induced product: %d triples over the cap %s skipped", skipped, alg.degree_cap)
    details = {"skipped_over_cap": skipped}
    return [product.report(details), bracket.report(details)]


def _load(alg, element: Element) -> int:
    return max((alg.truncation_load(w) for w in element.words()), default=0)


def _bracket_parts(inst: GbvaInstance, a: Element, b: Element) -> Element:
    result = Element()
    for part in a.parity_parts().values():
        result = result + inst.bracket(part, b)
    return result


def euler_dbva_example(degree_cap: int = 6) -> Tuple[GbvaInstance, LinOp, LinOp]:
    """Q[x] (x) Lambda[theta] with Delta = theta d/dx, D = x d/dtheta and L the Euler operator.

    [D, Delta] = L, so the cohomology of D is the span of 1.
    """
    alg = PolynomialSuperalgebra(1, 1, degree_cap, ["x"], ["theta"], name=f"Q[x|theta]_{degree_cap}")
    g = alg.generator_map()
    delta = left_multiplication(alg, g["theta"]).compose(even_derivative(alg, 0))
    delta.label = "theta d/dx"
    D = left_multiplication(alg, g["x"]).compose(odd_derivative(alg, 0))
    D.label = "x d/dtheta"
    L = diagonal_operator(alg.word_size, "L")
    return make_gbva_instance(alg, delta), D, L
