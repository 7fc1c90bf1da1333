"""Deforming Delta by an inner bracket derivation: Delta' = Delta + {a, -}."""
import logging
from typing import List, Optional

from base.elements import BasisWord, Element
from base.operators import LinOp, supercommutator, zero_operator
from base.reports import IdentityReport, ResidualCollector, refused
from bv.bracket import bv_bracket
from bv.identities import DEFAULT_SAMPLES, load_bound_for, sample_tuples
from bv.instance import GbvaInstance
from diffops.phi import phi_form
from diffops.sweep import DEFAULT_TUPLE_LIMIT, sweep_domain, sweep_tuples

from .candidates import max_load, require_even

logger = logging.getLogger(__name__)


def deform_delta(inst: GbvaInstance, a: Element) -> LinOp:
    """The operator b -> Delta(b) + {a, b} for an even element a.

    Raises:
        HomogeneityError: If a is not even
    """
    require_even(a, "deforming element")
    delta = inst.delta
    degrees = a.degrees()
    # {a, -} shifts the degree by |a| + |Delta|, so only |a| = 0 keeps Delta's degree
    degree = delta.degree if degrees <= {0} else None

    def action(word: BasisWord) -> Element:
        return delta.on_word(word) + inst.bracket(a, Element.from_word(word))

    return LinOp(action, degree, f"{delta.label} + {{a, -}}", parity=delta.parity)


def deformation_residual(inst: GbvaInstance, a: Element) -> Element:
    """Delta(a) + {a, a} / 2."""
    return inst.delta.apply(a) + inst.bracket(a, a).scale("1/2")


def check_deformation(
    inst: GbvaInstance,
    a: Element,
    D: Optional[LinOp] = None,
    L: Optional[LinOp] = None,
    samples: int = DEFAULT_SAMPLES,
    limit: int = DEFAULT_TUPLE_LIMIT,
    seed: int = 0,
) -> List[IdentityReport]:
    """Check that a solution of Delta(a) + {a, a}/2 = 0 deforms Delta soundly.

    When the deformation equation holds, Delta' is checked to be square zero
    and of order at most two, and to generate the same bracket as Delta.
    When a differential D is supplied and D(a) = 0, [D, Delta'] = L is
    checked as well. Sweep domains leave room for two factors of a below the
    degree cap.
    """
    inst.require_flags()
    alg = inst.alg
    equation = ResidualCollector("deformation-equation")
    equation.record((a,), deformation_residual(inst, a), Element())
    reports = [equation.report({"a": a.serialize()})]
    names = ["deformed-square-zero", "deformed-order", "bracket-unchanged"]
    if D is not None:
        names.append("deformed-differential")
    if not reports[0].passed:
        logger.info(f"{a} does not solve the deformation equation; skipping {names}")
        return reports + [refused(name, "not a master solution", "deformation_equation") for name in names]

    deformed = deform_delta(inst, a)
    headroom = 2 * max_load(alg, a)
    singles = sweep_domain(alg, 1, headroom)
    square = ResidualCollector("deformed-square-zero")
    for word in singles:
        source = Element.from_word(word)
        square.record((source,), deformed.apply(deformed.on_word(word)), Element())
    reports.append(square.report({"words": len(singles)}))

    triples, exhaustive = sweep_tuples(sweep_domain(alg, 3, headroom), 3, limit, seed)
    order = ResidualCollector("deformed-order")
    for args in triples:
        order.record(args, phi_form(alg, deformed, args), Element())
    reports.append(order.report({"exhaustive": exhaustive}))

    pairs, pairs_exhaustive = sample_tuples(alg, 2, samples, seed, load_bound_for(alg, 2, headroom))
    bracket = ResidualCollector("bracket-unchanged")
    for x, y in pairs:
        bracket.record((x, y), bv_bracket(alg, deformed, x, y), inst.bracket(x, y))
    reports.append(bracket.report({"exhaustive": pairs_exhaustive}))

    if D is not None:
        if not D.apply(a).is_zero():
            reports.append(refused("deformed-differential", f"{D.label} does not annihilate a", "d_kills_a"))
        else:
            L = L if L is not None else zero_operator(0, "0")
            commutator = supercommutator(D, deformed)
            differential = ResidualCollector("deformed-differential")
            for word in singles:
                source = Element.from_word(word)
                differential.record((source,), commutator.on_word(word), L.on_word(word))
            reports.append(differential.report())
    return reports
