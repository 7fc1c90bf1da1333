"""Mode identities of the bc system checked on weight-capped states."""
import logging
import random
from typing import Iterable, List, Optional, Sequence, Tuple

from base.elements import BasisWord, Element
from base.operators import LinOp, supercommutator
from base.reports import IdentityReport, ResidualCollector, TableReport
from base.scalars import binomial, derive_seed, sign
from bv.instance import GbvaInstance, make_gbva_instance
from diffops.order import check_order_laws
from diffops.phi import phi_form

from .fock import BcVertexAlgebra
from .modes import (
    bv_operator,
    generator_operator,
    l0_operator,
    mode_operator,
    virasoro_operator,
    weight_mode_operator,
)

logger = logging.getLogger(__name__)

DEFAULT_LIMIT = 2000
DERIVATION_PRODUCTS = (-2, -1, 0, 1)


def capped_words(alg: BcVertexAlgebra, weight_cap: Optional[int] = None) -> List[BasisWord]:
    cap = alg.weight_cap if weight_cap is None else weight_cap
    return [w for w in alg.basis() if w.weight <= cap]


def capped_tuples(
    alg: BcVertexAlgebra,
    arity: int,
    weight_cap: Optional[int] = None,
    limit: int = DEFAULT_LIMIT,
    seed: int = 0,
) -> Tuple[List[Tuple[Element, ...]], bool]:
    """Tuples of basis states whose total weight is at most the cap.

    Returns every such tuple when there are at most ``limit`` of them, and a
    deterministic sample of ``limit`` tuples otherwise.
    """
    cap = alg.weight_cap if weight_cap is None else weight_cap
    words = sorted(capped_words(alg, cap), key=lambda w: (w.weight, w))
    found: List[Tuple[BasisWord, ...]] = []

    def extend(prefix: List[BasisWord], total) -> bool:
        if len(prefix) == arity:
            found.append(tuple(prefix))
            return len(found) <= limit
        remaining = arity - len(prefix) - 1
        for word in words:
            # every later state has weight at least -1
            if total + word.weight - remaining > cap:
                break
            prefix.append(word)
            if not extend(prefix, total + word.weight):
                return False
            prefix.pop()
        return True

    exhaustive = extend([], 0)
    if exhaustive:
        return [tuple(Element.from_word(w) for w in t) for t in found], True
    rng = random.Random(derive_seed(seed, "capped", arity, cap))
    sample: List[Tuple[Element, ...]] = []
    attempts = 0
    while len(sample) < limit and attempts < 20 * limit:
        attempts += 1
        choice = [rng.choice(words) for _ in range(arity)]
        if sum(w.weight for w in choice) <= cap:
            sample.append(tuple(Element.from_word(w) for w in choice))
    logger.warning(f"{alg.name}: sampled {len(sample)} of more than {limit} capped {arity}-tuples")
    return sample, False


def _compare_operators(
    name: str, pairs: Iterable[Tuple[LinOp, LinOp]], words: Sequence[BasisWord]
) -> ResidualCollector:
    collector = ResidualCollector(name)
    for lhs, rhs in pairs:
        for word in words:
            collector.record((Element.from_word(word),), lhs.on_word(word), rhs.on_word(word))
    return collector


def geb2_sum(alg: BcVertexAlgebra, u: Element, m: int, v: Element, n: int) -> LinOp:
    """sum_i C(m, i) (u_(i) v)_(m+n-i) as an operator."""
    # u_(i) v vanishes once i exceeds wt(u) + wt(v)
    top = -1
    if not (u.is_zero() or v.is_zero()):
        top = int(max(u.weights()) + max(v.weights()))
    terms = []
    for i in range(0, top + 1):
        state = alg.mode_apply(u, i, v)
        coeff = binomial(m, i)
        if coeff and not state.is_zero():
            terms.append((coeff, state, m + n - i))

    def action(word: BasisWord) -> Element:
        result = Element()
        for coeff, state, index in terms:
            result = result + alg.mode_apply(state, index, Element.from_word(word)).scale(coeff)
        return result

    degree = (u.degree() or 0) + (v.degree() or 0)
    return LinOp(action, degree, f"sum_i C({m},i)(u_(i)v)_({m + n}-i)")


def commutator_check(
    alg: BcVertexAlgebra,
    u: Element,
    m: int,
    v: Element,
    n: int,
    weight_cap: Optional[int] = None,
) -> IdentityReport:
    """[u_(m), v_(n)] = sum_i C(m, i) (u_(i) v)_(m+n-i) on every capped state.

    The left side composes modes computed by the recursive mode expansion, so
    this also tests that expansion against the commutator formula.
    """
    lhs = supercommutator(mode_operator(alg, u, m), mode_operator(alg, v, n))
    rhs = geb2_sum(alg, u, m, v, n)
    words = capped_words(alg, weight_cap)
    collector = _compare_operators(f"commutator[{lhs.label}]", [(lhs, rhs)], words)
    return collector.report({"m": m, "n": n, "states": len(words)})


def check_anticommutators(
    alg: BcVertexAlgebra, mode_range: Sequence[int], weight_cap: Optional[int] = None
) -> IdentityReport:
    """{b_j, c_k} = delta_{j+k,0} and {b_j, b_k} = {c_j, c_k} = 0 (weight indexing)."""
    words = capped_words(alg, weight_cap)
    collector = ResidualCollector("anticommutators")
    for j in mode_range:
        for k in mode_range:
            for left, right in (("b", "c"), ("b", "b"), ("c", "c")):
                op = supercommutator(generator_operator(alg, left, j), generator_operator(alg, right, k))
                expected = 1 if left != right and j + k == 0 else 0
                for word in words:
                    source = Element.from_word(word)
                    collector.record((source,), op.on_word(word), source.scale(expected))
    return collector.report({"modes": list(mode_range)})


def check_primary_field(
    alg: BcVertexAlgebra,
    G: Element,
    weight: int,
    mode_range: Sequence[int],
    weight_cap: Optional[int] = None,
) -> IdentityReport:
    """[L_m, G_n] = ((weight - 1) m - n) G_{m+n} in weight indexing."""
    words = capped_words(alg, weight_cap)
    pairs = []
    for m in mode_range:
        L_m = virasoro_operator(alg, m)
        for n in mode_range:
            lhs = supercommutator(L_m, weight_mode_operator(alg, G, n))
            rhs = weight_mode_operator(alg, G, m + n).scaled((weight - 1) * m - n)
            pairs.append((lhs, rhs))
    collector = _compare_operators(f"primary-field[{G}]", pairs, words)
    return collector.report({"weight": weight, "modes": list(mode_range)})


def check_mode_order(
    alg: BcVertexAlgebra,
    u: Element,
    n: int,
    weight_cap: Optional[int] = None,
    limit: int = DEFAULT_LIMIT,
    seed: int = 0,
) -> IdentityReport:
    """u_(n) has order at most n + 1 for n >= 0; for n <= -1 it is a left multiplication.

    For n >= 0 the check asserts Phi^{n+2} = 0 on capped tuples and records
    a witness of Phi^{n+1} != 0 when the cap contains one. For n <= -1 it
    asserts the unital-adjusted Phi^1 vanishes on every capped state.
    """
    op = mode_operator(alg, u, n)
    if n <= -1:
        collector = ResidualCollector(f"left-multiplication[{op.label}]")
        for word in capped_words(alg, weight_cap):
            a = Element.from_word(word)
            collector.record((a,), phi_form(alg, op, [a], unital_adjust=True), Element())
        return collector.report({"n": n, "exhaustive": True})
    collector = ResidualCollector(f"mode-order[{op.label}]")
    tuples, exhaustive = capped_tuples(alg, n + 2, weight_cap, limit, seed)
    for args in tuples:
        collector.record(args, phi_form(alg, op, args), Element())
    witness = None
    lower, _ = capped_tuples(alg, n + 1, weight_cap, limit, seed)
    for args in lower:
        value = phi_form(alg, op, args)
        if not value.is_zero():
            witness = {"inputs": [a.serialize() for a in args], "value": value.serialize()}
            break
    return collector.report({"n": n, "order_bound": n + 1, "exhaustive": exhaustive, "witness": witness})


def check_phi2_expansion(
    alg: BcVertexAlgebra,
    u: Element,
    r: int,
    samples: int = DEFAULT_LIMIT,
    weight_cap: Optional[int] = None,
    seed: int = 0,
) -> IdentityReport:
    """Phi^2_{u_(r)}(a, b) = sum_{i=1}^r C(r, i) (u_(r-i) a)_(i-1) b."""
    if r < 1:
        raise ValueError("the expansion needs r >= 1")
    op = mode_operator(alg, u, r)
    pairs, exhaustive = capped_tuples(alg, 2, weight_cap, samples, seed)
    collector = ResidualCollector(f"phi2-expansion[{op.label}]")
    for a, b in pairs:
        rhs = Element()
        for i in range(1, r + 1):
            rhs = rhs + alg.mode_apply(alg.mode_apply(u, r - i, a), i - 1, b).scale(binomial(r, i))
        collector.record((a, b), phi_form(alg, op, [a, b]), rhs)
    return collector.report({"r": r, "exhaustive": exhaustive})


def check_l0_derivation(
    alg: BcVertexAlgebra,
    n: int,
    samples: int = DEFAULT_LIMIT,
    weight_cap: Optional[int] = None,
    seed: int = 0,
) -> IdentityReport:
    """L_0 - (n + 1) is a derivation of the product a_(n) b."""
    L0 = l0_operator(alg)

    def shifted(x: Element) -> Element:
        return L0.apply(x) - x.scale(n + 1)

    pairs, exhaustive = capped_tuples(alg, 2, weight_cap, samples, seed)
    collector = ResidualCollector(f"l0-derivation[{n}]")
    for a, b in pairs:
        collector.record(
            (a, b),
            shifted(alg.product_n(a, n, b)),
            alg.product_n(shifted(a), n, b) + alg.product_n(a, n, shifted(b)),
        )
    return collector.report({"n": n, "exhaustive": exhaustive})


def check_residue_derivation(
    alg: BcVertexAlgebra,
    u: Element,
    products: Sequence[int] = DERIVATION_PRODUCTS,
    samples: int = DEFAULT_LIMIT,
    weight_cap: Optional[int] = None,
    seed: int = 0,
) -> IdentityReport:
    """u_(0)(a_(n) b) = (u_(0) a)_(n) b + (-1)^{|u||a|} a_(n) (u_(0) b) for each n."""
    pairs, exhaustive = capped_tuples(alg, 2, weight_cap, samples, seed)
    collector = ResidualCollector(f"residue-derivation[{u}]")
    pu = u.parity()
    for n in products:
        for a, b in pairs:
            collector.record(
                (a, b),
                alg.mode_apply(u, 0, alg.product_n(a, n, b)),
                alg.product_n(alg.mode_apply(u, 0, a), n, b)
                + alg.product_n(a, n, alg.mode_apply(u, 0, b)).scale(sign(pu * a.parity())),
            )
    return collector.report({"products": list(products), "exhaustive": exhaustive})


def check_mode_order_laws(
    alg: BcVertexAlgebra,
    u: Element,
    modes: Sequence[int] = (0, 1),
    limit: int = 150,
    seed: int = 0,
) -> TableReport:
    """Order laws for compositions and brackets of the modes u_(k), claimed of order k + 1."""
    ops = [(mode_operator(alg, u, k), k + 1) for k in modes]
    report = check_order_laws(alg, ops, headroom=0, limit=limit, seed=seed)
    report.name = f"mode-order-laws[{u}]"
    return report


def check_g0_square_identity(
    alg: BcVertexAlgebra,
    G: Optional[Element] = None,
    weight: int = 2,
    weight_cap: Optional[int] = None,
) -> IdentityReport:
    """Mode identities for the square of the weight zero mode of a primary field G.

    On every capped state:
      (G_{-2} G)_0 = -G_0^2 - [G_1, G_{-1}]
      (G_1 G)_0 = 2 (-2 G_0^2 + [G_1, G_{-1}])
      2 G_0^2 = (G_{-1} G)_0 + (G_0 G)_0
    and on the vacuum L_3 G_{-2} G_{-2}|0> = (3 (weight - 1) + 2) G_1 G_{-2}|0>.
    Primariness of G is checked first and recorded.
    """
    G = G if G is not None else alg.field_state("b")
    words = capped_words(alg, weight_cap)
    primary = check_primary_field(alg, G, weight, range(-2, 4), weight_cap)

    def mode(k: int) -> LinOp:
        return weight_mode_operator(alg, G, k)

    def zero_mode_of(k: int) -> LinOp:
        state = mode(k).apply(G)
        # G_k G has weight wt(G) - k, so its zero mode is _(wt(G) - k - 1)
        return mode_operator(alg, state, weight - k - 1, f"(G_{k} G)_0")

    G0 = mode(0)
    square = G0.compose(G0)
    zero_modes = {k: zero_mode_of(k) for k in (-2, -1, 0, 1)}
    comm = supercommutator(mode(1), mode(-1))
    collector = ResidualCollector(f"g0-square[{G}]")
    for word in words:
        source = (Element.from_word(word),)
        sq, cm = square.on_word(word), comm.on_word(word)
        collector.record(source, zero_modes[-2].on_word(word), -sq - cm)
        collector.record(source, zero_modes[1].on_word(word), (cm - sq.scale(2)).scale(2))
        collector.record(source, sq.scale(2), zero_modes[-1].on_word(word) + zero_modes[0].on_word(word))
    vacuum = alg.vacuum()
    top = mode(-2).apply(mode(-2).apply(vacuum))
    lhs = virasoro_operator(alg, 3).apply(top)
    rhs = mode(1).apply(mode(-2).apply(vacuum)).scale(3 * (weight - 1) + 2)
    collector.record((vacuum,), lhs, rhs)
    return collector.report({
        "primary": primary.status.value,
        "state_weights": {"G_-2 G_-2|0>": 2 * weight, "L_3 G_-2 G_-2|0>": 2 * weight - 3},
        "states": len(words),
    })


def bc_gbva_instance(weight_cap: int = 2, limit: int = 1500, seed: int = 0) -> GbvaInstance:
    """The bc system with Delta = b_0 = b_(1) as a generalized BV algebra."""
    alg = BcVertexAlgebra(weight_cap)
    return make_gbva_instance(alg, bv_operator(alg), headroom=0, limit=limit, seed=seed)
