"""Checks that D_nabla generates the Schouten-Nijenhuis bracket."""
import logging
from typing import List, Optional, Union

from base.elements import Element
from base.enums import CheckStatus
from base.random_gen import random_homogeneous
from base.reports import IdentityReport, OrderReport, ResidualCollector
from base.scalars import derive_seed
from bv.bracket import bv_bracket
from bv.identities import check_gerstenhaber_axioms, homogeneous_pool, load_bound_for, sample_tuples
from diffops.order import classify_order

from .bracket import sn_bracket
from .multivector import apply_field, d_nabla, multivector_algebra

logger = logging.getLogger(__name__)


def _global_sign(generated: Element, expected: Element) -> Optional[int]:
    if generated == expected:
        return 1
    if generated == -expected:
        return -1
    return None


def check_sn_generation(
    n: int, poly_cap: int = 2, samples: int = 200, seed: int = 0
) -> List[Union[IdentityReport, OrderReport]]:
    """Compare (-1)^{|u|} Phi^2_D(u, v) with [u, v] and classify D_nabla.

    The sign between the two brackets is read off the first pair with a
    nonzero bracket and must then hold for every pair; it is recorded as
    ``global_sign``. Also checks D_nabla^2 = 0 on the whole basis and that
    D_nabla has order exactly 2. The order is classified with two more
    coefficient degrees than ``poly_cap``, so that the Phi^2 sweep reaches
    coefficients of degree one.

    Returns:
        List: generation report, square-zero report, order report
    """
    alg = multivector_algebra(n, poly_cap)
    D = d_nabla(alg)
    pairs, exhaustive = sample_tuples(alg, 2, samples, seed, load_bound_for(alg, 2))
    generation = ResidualCollector(f"sn-generation[n={n}]")
    global_sign = None
    for u, v in pairs:
        generated = bv_bracket(alg, D, u, v)
        expected = sn_bracket(alg, u, v)
        if global_sign is None and not expected.is_zero():
            global_sign = _global_sign(generated, expected)
            if global_sign is None:
                global_sign = 1
            logger.debug(f"n={n}: global sign {global_sign} fixed by ({u}, {v})")
        generation.record((u, v), generated, expected.scale(global_sign or 1))
    square = ResidualCollector(f"d-nabla-square-zero[n={n}]")
    for word in alg.basis():
        square.record((Element.from_word(word),), D.apply(D.on_word(word)), Element())
    order_alg = multivector_algebra(n, max(poly_cap, 1) + 2)
    order = classify_order(order_alg, d_nabla(order_alg), 3, expected=2, seed=seed)
    order.details["poly_cap"] = order_alg.degree_cap
    return [
        generation.report({"global_sign": global_sign, "poly_cap": poly_cap, "exhaustive": exhaustive}),
        square.report({"exhaustive": True}),
        order,
    ]


def check_gerstenhaber(n: int, poly_cap: int = 3, samples: int = 200, seed: int = 0) -> List[IdentityReport]:
    """Shifted skew symmetry, Jacobi and the Poisson rule for the SN bracket.

    Inputs have coefficient degree at most poly_cap // 3 so that no product
    in an identity reaches the truncation.
    """
    alg = multivector_algebra(n, poly_cap)
    pool = homogeneous_pool(alg, 5, seed, load_bound=poly_cap // 3)
    reports = check_gerstenhaber_axioms(alg, lambda a, b: sn_bracket(alg, a, b), pool, samples, seed)
    problems = alg.check_flags([w for w in alg.basis() if alg.truncation_load(w) <= poly_cap // 3])
    reports.append(IdentityReport(
        name=f"classical-flags[n={n}]",
        samples=len(alg.basis()),
        status=CheckStatus.FAIL if problems else CheckStatus.PASS,
        details={"problems": problems[:5]},
    ))
    return reports


def commutator_field(alg, X: Element, Y: Element) -> Element:
    """The vector field whose j-th coefficient is X(Y(x_j)) - Y(X(x_j))."""
    result = Element()
    for j in range(alg.n_even):
        x_j = alg.even_generator(j)
        coefficient = apply_field(alg, X, apply_field(alg, Y, x_j)) - apply_field(alg, Y, apply_field(alg, X, x_j))
        result = result + alg.multiply(coefficient, alg.odd_generator(j))
    return result


def check_vector_field_oracle(n: int, poly_cap: int = 2, samples: int = 100, seed: int = 0) -> IdentityReport:
    """On vector fields the SN bracket is the commutator of derivations."""
    alg = multivector_algebra(n, poly_cap)
    bound = max(poly_cap // 2, 1)
    collector = ResidualCollector(f"vector-field-oracle[n={n}]")
    for i in range(samples):
        X = random_homogeneous(alg, derive_seed(seed, "X", i), load_bound=bound, degrees=(1,))
        Y = random_homogeneous(alg, derive_seed(seed, "Y", i), load_bound=bound, degrees=(1,))
        collector.record((X, Y), sn_bracket(alg, X, Y), commutator_field(alg, X, Y))
    return collector.report({"poly_cap": poly_cap})
