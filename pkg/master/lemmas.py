"""Power lemmas, the exponential identity and the Phi-expansion of Delta(W^k)."""
import logging
from fractions import Fraction
from typing import List

from base.algebra import Superalgebra
from base.elements import Element
from base.errors import PreconditionError
from base.operators import LinOp
from base.reports import IdentityReport, ResidualCollector, refused
from base.scalars import ScalarLike, binomial, format_scalar, to_scalar
from bv.instance import GbvaInstance
from diffops.order import classify_order
from diffops.phi import phi_form

from .candidates import MasterCandidate, exact_power_limit, max_load, nilpotent_powers, require_even

logger = logging.getLogger(__name__)


def _require_classical(cand: MasterCandidate) -> None:
    if not cand.alg.flags.classical:
        raise PreconditionError(f"{cand.alg.name} is not a classical algebra", "classical")
    cand.instance.require_flags()


def master_equation_report(cand: MasterCandidate) -> IdentityReport:
    collector = ResidualCollector("master-equation")
    collector.record((cand.W,), cand.instance.bracket(cand.W, cand.W), cand.delta_w().scale(cand.lam))
    return collector.report({"candidate": cand.to_dict()})


def check_power_lemmas(cand: MasterCandidate, k_max: int = 5) -> List[IdentityReport]:
    """{W, W^k} = k lambda Delta(W) W^(k-1) and
    Delta(W^k) = C(k, 2) lambda Delta(W) W^(k-2) + k Delta(W) W^(k-1).

    Both are checked for k = 1..k_max once {W, W} = lambda Delta(W) is
    confirmed; otherwise the master-equation report carries the residual and
    the lemma reports are refused. Exponents whose powers would be cut by the
    degree cap are skipped and logged.

    Raises:
        PreconditionError: If the instance is not a classical BV algebra
    """
    _require_classical(cand)
    master = master_equation_report(cand)
    if not master.passed:
        message = "W does not solve {W, W} = lambda Delta(W)"
        return [master, refused("bracket-power-lemma", message, "master"), refused("delta-power-lemma", message, "master")]
    alg, W, lam = cand.alg, cand.W, cand.lam
    limit = exact_power_limit(alg, W)
    ks = [k for k in range(1, k_max + 1) if limit is None or k + 1 <= limit]
    if len(ks) < k_max:
        logger.warning(f"{alg.name}: power lemmas checked only for k in {ks} under cap {alg.degree_cap}")
    powers = [alg.unit()]
    for _ in range(k_max + 1):
        powers.append(alg.multiply(powers[-1], W))
    dW = cand.delta_w()
    bracket_lemma = ResidualCollector("bracket-power-lemma")
    delta_lemma = ResidualCollector("delta-power-lemma")
    for k in ks:
        bracket_lemma.record(
            (W,),
            cand.instance.bracket(W, powers[k]),
            alg.multiply(dW, powers[k - 1]).scale(k * lam),
        )
        rhs = alg.multiply(dW, powers[k - 1]).scale(k)
        if k >= 2:
            rhs = rhs + alg.multiply(dW, powers[k - 2]).scale(binomial(k, 2) * lam)
        delta_lemma.record((W,), cand.instance.delta.apply(powers[k]), rhs)
    details = {"k_checked": ks}
    return [master, bracket_lemma.report(details), delta_lemma.report(details)]


def exp_check(cand: MasterCandidate, scale: ScalarLike = 1) -> IdentityReport:
    """Delta(exp V) = (mu/2 + 1) Delta(V) exp(V) for V = scale * W.

    With {W, W} = lambda Delta(W) the rescaled V satisfies {V, V} = mu Delta(V)
    for mu = scale * lambda; mu = -2 makes exp(V) Delta-closed. exp(V) is only
    formed for nilpotent V whose nonzero powers fit under the cap; anything
    else is refused.
    """
    s = to_scalar(scale)
    name = "exp-identity"
    if not cand.holds():
        return refused(name, "W does not solve {W, W} = lambda Delta(W)", "master")
    alg, delta = cand.alg, cand.instance.delta
    V = cand.W.scale(s)
    mu = s * cand.lam
    try:
        powers = nilpotent_powers(alg, V)
    except PreconditionError as e:
        return refused(name, e.message, e.flag)
    exp_v = Element()
    factorial = Fraction(1)
    for k, power in enumerate(powers):
        if k:
            factorial *= k
        exp_v = exp_v + power.scale(1 / factorial)
    lhs = delta.apply(exp_v)
    rhs = alg.multiply(delta.apply(V), exp_v).scale(mu / 2 + 1)
    collector = ResidualCollector(name)
    collector.record((V,), lhs, rhs)
    return collector.report({"mu": format_scalar(mu), "terms": len(powers), "closed": lhs.is_zero()})


def phi_expansion_check(
    alg: Superalgebra,
    delta: LinOp,
    W: Element,
    k_max: int = 4,
    order_limit: int = 400,
    seed: int = 0,
) -> IdentityReport:
    """Delta(W^k) = sum_{j=1}^k C(k, j) W^(k-j) Phi^j_Delta(W, ..., W) for any odd Delta.

    Exponents whose powers would be cut by the degree cap are skipped, as in
    :func:`check_power_lemmas`. When some checked j is at least 3, Delta is
    classified on the words no heavier than those of W; if it has order at
    most two there, Phi^j(W, ..., W) = 0 is also recorded for those j, so that
    only two terms survive.

    Raises:
        PreconditionError: If the algebra is not classical or Delta is even
        HomogeneityError: If W is not even
    """
    if not alg.flags.classical:
        raise PreconditionError(f"{alg.name} is not a classical algebra", "classical")
    if delta.parity != 1:
        raise PreconditionError(f"{delta.label} is not odd", "delta_odd")
    require_even(W, "expanded element")
    limit = exact_power_limit(alg, W)
    ks = [k for k in range(1, k_max + 1) if limit is None or k + 1 <= limit]
    if len(ks) < k_max:
        logger.warning(f"{alg.name}: Phi-expansion checked only for k in {ks} under cap {alg.degree_cap}")
    powers = [alg.unit()]
    for _ in ks:
        powers.append(alg.multiply(powers[-1], W))
    phis = {j: phi_form(alg, delta, [W] * j) for j in ks}
    collector = ResidualCollector(f"phi-expansion[{delta.label}]")
    for k in ks:
        rhs = Element()
        for j in range(1, k + 1):
            rhs = rhs + alg.multiply(powers[k - j], phis[j]).scale(binomial(k, j))
        collector.record((W,), delta.apply(powers[k]), rhs)
    higher = [j for j in ks if j >= 3]
    second_order = None
    if higher:
        load = max_load(alg, W)
        domain = [w for w in alg.basis() if alg.truncation_load(w) <= load]
        order = classify_order(alg, delta, 2, domain=domain, limit=order_limit, seed=seed)
        second_order = order.order is not None and order.order <= 2
        if second_order:
            for j in higher:
                collector.record((W,) * j, phis[j], Element())
    return collector.report({"k_checked": ks, "second_order": second_order})


def classical_master(inst: GbvaInstance, S: Element) -> IdentityReport:
    """The classical master equation {S, S} = 0."""
    require_even(S, "classical master candidate")
    collector = ResidualCollector("classical-master-equation")
    collector.record((S,), inst.bracket(S, S), Element())
    return collector.report()
