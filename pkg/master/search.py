"""Bounded search for master solutions and the order-by-order master tower."""
import itertools
import logging
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from base.elements import Element
from base.reports import IdentityReport, ResidualCollector
from base.scalars import ScalarLike, format_scalar, to_scalar
from bv.instance import GbvaInstance

from .candidates import require_even

logger = logging.getLogger(__name__)

DEFAULT_COEFFS = range(-2, 3)


def proportionality(target: Element, reference: Element):
    """The scalar c with target = c * reference, or None."""
    if reference.is_zero():
        return None
    word = reference.words()[0]
    c = target.coefficient(word) / reference.coefficient(word)
    return c if target == reference.scale(c) else None


def search_master_solutions(
    inst: GbvaInstance,
    elements: Sequence[Element],
    coeff_range: Iterable[int] = DEFAULT_COEFFS,
) -> List[Tuple[Element, Fraction]]:
    """Every W = sum c_i e_i with Delta(W) != 0 and {W, W} = lambda Delta(W).

    Args:
        inst: Instance providing Delta and the bracket
        elements: Even elements spanning the search space
        coeff_range: Coefficients tried for each element

    Returns:
        List[Tuple[Element, Fraction]]: The solutions with their lambda, in search order
    """
    for e in elements:
        require_even(e, "search element")
    coeffs = list(coeff_range)
    found = []
    tried = 0
    for combo in itertools.product(coeffs, repeat=len(elements)):
        W = Element()
        for c, e in zip(combo, elements):
            W = W + e.scale(c)
        if W.is_zero():
            continue
        tried += 1
        delta_w = inst.delta.apply(W)
        if delta_w.is_zero():
            continue
        lam = proportionality(inst.bracket(W, W), delta_w)
        if lam is not None:
            found.append((W, lam))
    logger.info(f"master search on {inst.alg.name}: {len(found)} solutions among {tried} candidates")
    return found


def check_master_tower(
    inst: GbvaInstance,
    S: Element,
    Ms: Sequence[Element],
    lam: ScalarLike,
) -> List[IdentityReport]:
    """Expand {W, W} = lam0 t Delta(W) for W = S + sum_p t^p M_p order by order.

    The coefficient of t^p in {W, W} - lam0 t Delta(W) is compared with twice
    the tower residual
        {M_p, S} - (lam0/2) Delta(M_{p-1}) + (1/2) sum_{q=1}^{p-1} {M_q, M_{p-q}}
    (and with {S, S} at p = 0); the second report says whether the tower
    itself holds at every order.
    """
    lam0 = to_scalar(lam)
    terms = [S] + list(Ms)
    for index, term in enumerate(terms):
        require_even(term, f"tower term {index}")
    P = len(Ms)
    top = max(2 * P, P + 1)

    def term(p: int) -> Element:
        return terms[p] if 0 <= p <= P else Element()

    br, delta = inst.bracket, inst.delta.apply
    expansion = ResidualCollector("tower-expansion")
    tower = ResidualCollector("master-tower")
    for p in range(top + 1):
        coefficient = Element()
        for q in range(0, p + 1):
            coefficient = coefficient + br(term(q), term(p - q))
        if p >= 1:
            coefficient = coefficient - delta(term(p - 1)).scale(lam0)
        if p == 0:
            residual = br(S, S).scale("1/2")
        else:
            residual = br(term(p), S) - delta(term(p - 1)).scale(lam0 / 2)
            for q in range(1, p):
                residual = residual + br(term(q), term(p - q)).scale("1/2")
        expansion.record(tuple(terms), coefficient, residual.scale(2))
        tower.record(tuple(terms), residual, Element())
    details = {"orders": top + 1, "lambda0": format_scalar(lam0)}
    return [expansion.report(details), tower.report(details)]
