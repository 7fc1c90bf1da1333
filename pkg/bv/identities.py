"""Identity checkers for generated brackets.

Each checker samples homogeneous inputs, compares both sides exactly and
returns one IdentityReport per identity with the first counterexample.
"""
import itertools
import logging
import random
from typing import Callable, List, Optional, Sequence, Tuple

from base.algebra import Superalgebra
from base.elements import Element
from base.errors import PreconditionError
from base.operators import LinOp, supercommutator, zero_operator
from base.random_gen import candidate_words, random_homogeneous
from base.reports import IdentityReport, ResidualCollector
from base.scalars import derive_seed, sign
from diffops.order import find_witness
from diffops.phi import STANDARD_SIGNS, PhiSigns, phi_form
from diffops.sweep import sweep_domain

from .bracket import bv_bracket, tilde_phi2
from .instance import GbvaInstance

logger = logging.getLogger(__name__)

Bracket = Callable[[Element, Element], Element]

EXHAUSTIVE_BASIS_LIMIT = 12
DEFAULT_SAMPLES = 200


def load_bound_for(alg: Superalgebra, arity: int, headroom: int = 0) -> Optional[int]:
    if alg.degree_cap is None:
        return None
    return max(alg.degree_cap - headroom, 0) // arity


def sample_tuples(
    alg: Superalgebra,
    arity: int,
    samples: int,
    seed: int,
    load_bound: Optional[int] = None,
    exhaustive_limit: int = EXHAUSTIVE_BASIS_LIMIT,
) -> Tuple[List[Tuple[Element, ...]], bool]:
    """Random homogeneous tuples, plus every basis tuple when the basis is small."""
    words = candidate_words(alg, load_bound=load_bound)
    tuples: List[Tuple[Element, ...]] = []
    exhaustive = len(words) <= exhaustive_limit
    if exhaustive:
        elements = [Element.from_word(w) for w in words]
        tuples.extend(itertools.product(elements, repeat=arity))
    for i in range(samples):
        tuples.append(tuple(
            random_homogeneous(alg, derive_seed(seed, "tuple", arity, i, j), load_bound=load_bound)
            for j in range(arity)
        ))
    return tuples, exhaustive


def check_gbva_identities(
    inst: GbvaInstance, samples: int = DEFAULT_SAMPLES, seed: int = 0
) -> List[IdentityReport]:
    """Skew symmetry, Jacobi, Poisson and Delta-derivation for a generalized BV algebra.

    Raises:
        PreconditionError: If the instance failed one of its axioms
    """
    inst.require_flags()
    alg, delta = inst.alg, inst.delta
    br, m, D = inst.bracket, alg.multiply, delta.apply
    triples, exhaustive = sample_tuples(alg, 3, samples, seed, load_bound_for(alg, 3))
    skew = ResidualCollector("skew-symmetry")
    jacobi = ResidualCollector("jacobi")
    poisson = ResidualCollector("poisson")
    derivation = ResidualCollector("delta-derivation")
    for a, b, c in triples:
        pa, pb, pc = a.parity(), b.parity(), c.parity()
        skew.record(
            (a, b),
            br(a, b) + br(b, a).scale(sign((pa + 1) * (pb + 1))),
            inst.tilde_phi2(a, b).scale(sign(pa)),
        )
        jacobi.record(
            (a, b, c),
            br(a, br(b, c)),
            br(br(a, b), c) + br(b, br(a, c)).scale(sign((pa + 1) * (pb + 1))),
        )
        poisson.record(
            (a, b, c),
            br(a, m(b, c)) - m(br(a, b), c) - m(b, br(a, c)).scale(sign((pa + 1) * pb)),
            Element(),
        )
        derivation.record(
            (a, b),
            D(br(a, b)),
            br(D(a), b) + br(a, D(b)).scale(sign(pa + 1)),
        )
    details = {"exhaustive": exhaustive, "flags": inst.flags.to_dict()}
    return [r.report(details) for r in (skew, jacobi, poisson, derivation)]


def check_general_identities(
    alg: Superalgebra,
    delta: LinOp,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    signs: PhiSigns = STANDARD_SIGNS,
) -> List[IdentityReport]:
    """Bracket identities with explicit Phi correction terms, for any odd operator.

    No law of the algebra and no property of Delta beyond oddness is assumed.
    """
    if delta.parity != 1:
        raise PreconditionError(f"{delta.label} is not odd", "delta_odd")
    square = delta.compose(delta)
    D, m = delta.apply, alg.multiply

    def br(a: Element, b: Element) -> Element:
        return bv_bracket(alg, delta, a, b, signs)

    def phi(op: LinOp, *args: Element) -> Element:
        return phi_form(alg, op, args, signs=signs)

    triples, exhaustive = sample_tuples(alg, 3, samples, seed, load_bound_for(alg, 3))
    skew = ResidualCollector("general-skew-symmetry")
    jacobi = ResidualCollector("general-jacobi")
    poisson = ResidualCollector("general-poisson")
    derivation = ResidualCollector("general-delta-derivation")
    for x, a, b in triples:
        px, pa, pb = x.parity(), a.parity(), b.parity()
        skew.record(
            (x, a),
            br(x, a) + br(a, x).scale(sign((px + 1) * (pa + 1))),
            tilde_phi2(alg, delta, x, a, signs).scale(sign(px)),
        )
        lhs = br(br(x, a), b) + br(a, br(x, b)).scale(sign((px + 1) * (pa + 1))) - br(x, br(a, b))
        rhs = (
            D(phi(delta, x, a, b))
            - phi(square, x, a, b)
            + phi(delta, D(x), a, b)
            + phi(delta, x, D(a), b).scale(sign(px))
            + phi(delta, x, a, D(b)).scale(sign(px + pa))
        ).scale(sign(pa))
        jacobi.record((x, a, b), lhs, rhs)
        poisson.record(
            (x, a, b),
            br(x, m(a, b)) - m(br(x, a), b) - m(a, br(x, b)).scale(sign((px + 1) * pa)),
            phi(delta, x, a, b).scale(sign(px)),
        )
        derivation.record(
            (x, a),
            D(br(x, a)) - br(D(x), a) - br(x, D(a)).scale(sign(px + 1)),
            phi(square, x, a).scale(sign(px)),
        )
    details = {"exhaustive": exhaustive, "algebra": alg.name, "operator": delta.label}
    return [r.report(details) for r in (skew, jacobi, poisson, derivation)]


def check_d_derivation(
    inst: GbvaInstance,
    D: LinOp,
    L: Optional[LinOp] = None,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> IdentityReport:
    """D{a, b} = {Da, b} + (-1)^{(|a|+1)|D|} {a, Db} when D, L are derivations and [D, Delta] = L.

    Raises:
        PreconditionError: Naming the hypothesis that failed
    """
    alg, delta = inst.alg, inst.delta
    L = L if L is not None else zero_operator(0, "0")
    pair_domain = sweep_domain(alg, 2, 2)
    for name, op in (("d_derivation", D), ("l_derivation", L)):
        witness, _ = find_witness(alg, op, 2, pair_domain)
        if witness is not None:
            raise PreconditionError(f"{op.label} is not a derivation", name)
    anticommutator = supercommutator(D, delta) - L
    if not anticommutator.is_zero_on(sweep_domain(alg, 1, 2)):
        raise PreconditionError(f"[{D.label}, {delta.label}] differs from {L.label}", "anticommutator")
    pairs, exhaustive = sample_tuples(alg, 2, samples, seed, load_bound_for(alg, 2, 2))
    collector = ResidualCollector(f"bracket-derivation[{D.label}]")
    for a, b in pairs:
        collector.record(
            (a, b),
            D.apply(inst.bracket(a, b)),
            inst.bracket(D.apply(a), b) + inst.bracket(a, D.apply(b)).scale(sign((a.parity() + 1) * D.parity)),
        )
    return collector.report({"exhaustive": exhaustive})


def _triples(pool: Sequence[Element], samples: int, seed: int, limit: int = 4096):
    if len(pool) ** 3 <= limit:
        return list(itertools.product(pool, repeat=3)), True
    rng = random.Random(derive_seed(seed, "pool", len(pool)))
    return [tuple(rng.choice(pool) for _ in range(3)) for _ in range(samples)], False


def check_leibniz(
    bracket: Bracket,
    pool: Sequence[Element],
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    shift: int = 1,
    name: str = "leibniz",
) -> IdentityReport:
    """[x, [y, z]] = [[x, y], z] + (-1)^{|x|'|y|'} [y, [x, z]] with |x|' = |x| + shift."""
    collector = ResidualCollector(name)
    triples, exhaustive = _triples(pool, samples, seed)
    for x, y, z in triples:
        px, py = x.parity() + shift, y.parity() + shift
        collector.record(
            (x, y, z),
            bracket(x, bracket(y, z)),
            bracket(bracket(x, y), z) + bracket(y, bracket(x, z)).scale(sign(px * py)),
        )
    return collector.report({"exhaustive": exhaustive, "shift": shift})


def check_gerstenhaber_axioms(
    alg: Superalgebra,
    bracket: Bracket,
    pool: Sequence[Element],
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> List[IdentityReport]:
    """Graded antisymmetry, Jacobi and Poisson rule for a degree -1 bracket."""
    skew = ResidualCollector("gerstenhaber-antisymmetry")
    poisson = ResidualCollector("gerstenhaber-poisson")
    triples, exhaustive = _triples(pool, samples, seed)
    for a, b, c in triples:
        pa, pb = a.parity(), b.parity()
        skew.record((a, b), bracket(a, b), -bracket(b, a).scale(sign((pa + 1) * (pb + 1))))
        poisson.record(
            (a, b, c),
            bracket(a, alg.multiply(b, c)),
            alg.multiply(bracket(a, b), c) + alg.multiply(b, bracket(a, c)).scale(sign((pa + 1) * pb)),
        )
    jacobi = check_leibniz(bracket, pool, samples, seed, 1, "gerstenhaber-jacobi")
    details = {"exhaustive": exhaustive}
    return [skew.report(details), jacobi, poisson.report(details)]


def homogeneous_pool(
    alg: Superalgebra, size: int, seed: int, load_bound: Optional[int] = None
) -> List[Element]:
    """Basis words of small load followed by random homogeneous elements."""
    pool = [Element.from_word(w) for w in candidate_words(alg, load_bound=load_bound)][:size]
    index = 0
    while len(pool) < 2 * size and index < 4 * size:
        element = random_homogeneous(alg, derive_seed(seed, "pool", index), load_bound=load_bound)
        index += 1
        if not element.is_zero():
            pool.append(element)
    return pool
