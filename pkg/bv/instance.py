"""Generalized BV algebras: an algebra with a checked odd operator."""
import logging
from dataclasses import dataclass
from typing import Dict, Optional

from base.algebra import Superalgebra
from base.elements import Element
from base.errors import PreconditionError
from base.operators import LinOp
from diffops.order import find_witness
from diffops.phi import STANDARD_SIGNS, PhiSigns
from diffops.sweep import DEFAULT_TUPLE_LIMIT, sweep_domain

from .bracket import bv_bracket, tilde_phi2

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GbvaFlags:
    """Which generalized BV axioms were verified on the sweep domain."""

    delta_odd: bool
    square_zero: bool
    order_le_2: bool
    kills_unit: bool
    exhaustive: bool = True

    def failed(self) -> Optional[str]:
        for name in ("delta_odd", "square_zero", "order_le_2", "kills_unit"):
            if not getattr(self, name):
                return name
        return None

    def to_dict(self) -> Dict[str, bool]:
        return {
            "delta_odd": self.delta_odd,
            "square_zero": self.square_zero,
            "order_le_2": self.order_le_2,
            "kills_unit": self.kills_unit,
            "exhaustive": self.exhaustive,
        }


@dataclass
class GbvaInstance:
    alg: Superalgebra
    delta: LinOp
    flags: GbvaFlags
    signs: PhiSigns = STANDARD_SIGNS

    def bracket(self, a: Element, b: Element) -> Element:
        return bv_bracket(self.alg, self.delta, a, b, self.signs)

    def tilde_phi2(self, a: Element, b: Element) -> Element:
        return tilde_phi2(self.alg, self.delta, a, b, self.signs)

    def require_flags(self) -> None:
        flag = self.flags.failed()
        if flag:
            raise PreconditionError(f"{self.delta.label} on {self.alg.name} fails {flag}", flag)


def make_gbva_instance(
    alg: Superalgebra,
    delta: LinOp,
    headroom: int = 1,
    limit: int = DEFAULT_TUPLE_LIMIT,
    seed: int = 0,
    signs: PhiSigns = STANDARD_SIGNS,
) -> GbvaInstance:
    """Check the generalized BV axioms for (alg, delta) and record the flags.

    Args:
        alg: Algebra
        delta: Candidate BV operator
        headroom: Cap headroom for sweep domains
        limit: Tuple limit before sampling
        seed: Sampling seed
        signs: Recursion coefficients (standard unless testing mutations)

    Returns:
        GbvaInstance: Instance with its flags; never raises on a failed axiom
    """
    words = sweep_domain(alg, 1, headroom)
    square = delta.compose(delta)
    square_zero = square.is_zero_on(words)
    witness, exhaustive = find_witness(
        alg, delta, 3, sweep_domain(alg, 3, headroom), limit=limit, seed=seed, signs=signs
    )
    unit = alg.unit()
    kills_unit = unit is None or delta.apply(unit).is_zero()
    flags = GbvaFlags(
        delta_odd=delta.parity == 1,
        square_zero=square_zero,
        order_le_2=witness is None,
        kills_unit=kills_unit,
        exhaustive=exhaustive,
    )
    logger.info(f"GBVA flags for {delta.label} on {alg.name}: {flags.to_dict()}")
    return GbvaInstance(alg, delta, flags, signs)
