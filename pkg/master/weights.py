"""Weight bookkeeping that confines master solutions of a vertex algebra to weight zero."""
import logging
from fractions import Fraction

from base.elements import Element
from base.errors import HomogeneityError, PreconditionError
from base.operators import diagonal_operator
from base.reports import IdentityReport, ResidualCollector
from base.scalars import ScalarLike, format_scalar, to_scalar
from bv.instance import GbvaInstance

from .candidates import require_even

logger = logging.getLogger(__name__)


def check_weight_obstruction(inst: GbvaInstance, W: Element, lam: ScalarLike) -> IdentityReport:
    """Weights of {W, W} and Delta(W) for a weight-homogeneous even state W.

    With Delta = u_(1) shifting weights by s = wt(u) - 2, Delta(W) has weight
    wt(W) + s and {W, W} has weight 2 wt(W) + s. For wt(W) != 0 the two lie
    in different weight spaces, so {W, W} = lambda Delta(W) with lambda != 0
    forces Delta(W) = 0; the check confirms that {W, W} has no component in
    the weight of Delta(W).

    Raises:
        HomogeneityError: If W is zero, odd or mixes weights
        PreconditionError: If Delta has no weight shift
    """
    lam = to_scalar(lam)
    require_even(W, "master candidate")
    if W.is_zero():
        raise HomogeneityError("the zero state has no weight", 0)
    weight = W.weight()
    shift = inst.delta.weight_shift
    if shift is None:
        raise PreconditionError(f"{inst.delta.label} does not shift weights uniformly", "weight_shift")
    reader = diagonal_operator(lambda w: w.weight, "L_0")
    delta_w = inst.delta.apply(W)
    bracket = inst.bracket(W, W)
    delta_weight = weight + shift
    bracket_weight = 2 * weight + shift
    collector = ResidualCollector(f"weight-obstruction[{W}]")
    collector.record((W,), reader.apply(delta_w), delta_w.scale(delta_weight))
    collector.record((W,), reader.apply(bracket), bracket.scale(bracket_weight))
    obstructed = weight != 0
    if obstructed:
        collector.record((W,), bracket.weight_parts().get(delta_weight, Element()), Element())
    solves = (bracket - delta_w.scale(lam)).is_zero()
    return collector.report({
        "weight": format_scalar(Fraction(weight)),
        "delta_weight": format_scalar(Fraction(delta_weight)),
        "bracket_weight": format_scalar(Fraction(bracket_weight)),
        "obstructed": obstructed,
        "delta_vanishes": delta_w.is_zero(),
        "solves": solves,
    })
