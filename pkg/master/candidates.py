"""Candidate solutions of the quantum master equation {W, W} = lambda Delta(W)."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from base.algebra import Superalgebra
from base.elements import Element
from base.errors import HomogeneityError, PreconditionError
from base.polynomial import PolynomialSuperalgebra
from base.scalars import ScalarLike, format_scalar, to_scalar
from bv.classical import classical_bv_algebra
from bv.instance import GbvaInstance, make_gbva_instance

logger = logging.getLogger(__name__)

MAX_POWER = 32


def require_even(element: Element, what: str = "element") -> None:
    if not element.is_parity_homogeneous() or element.parity() != 0:
        raise HomogeneityError(f"the {what} must be even, got {element}", 0)


@dataclass
class MasterCandidate:
    """An even element W together with a proposed lambda.

    Whether {W, W} = lambda Delta(W) actually holds is computed by
    :meth:`residual`, never assumed.
    """

    W: Element
    lam: Fraction
    instance: GbvaInstance

    def __post_init__(self):
        self.lam = to_scalar(self.lam)
        require_even(self.W, "master candidate")

    @property
    def alg(self) -> Superalgebra:
        return self.instance.alg

    def delta_w(self) -> Element:
        return self.instance.delta.apply(self.W)

    def residual(self) -> Element:
        """{W, W} - lambda Delta(W)."""
        return self.instance.bracket(self.W, self.W) - self.delta_w().scale(self.lam)

    def holds(self) -> bool:
        return self.residual().is_zero()

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "W": self.W.serialize(),
            "lambda": format_scalar(self.lam),
            "algebra": self.alg.name,
            "operator": self.instance.delta.label,
        }


def max_load(alg: Superalgebra, element: Element) -> int:
    return max((alg.truncation_load(w) for w in element.words()), default=0)


def nilpotency_bound(alg: Superalgebra, element: Element) -> Optional[int]:
    """Largest exponent k with element^k possibly nonzero, or None if unknown.

    An even element of Q[x] (x) Lambda(theta) without a pure polynomial part
    has at least two odd factors per word, so its powers vanish past n_odd / 2.
    """
    if not isinstance(alg, PolynomialSuperalgebra):
        return None
    if any(not odds for _, odds in (alg.split(w) for w in element.words())):
        return None
    return alg.n_odd // 2


def exact_power_limit(alg: Superalgebra, element: Element) -> Optional[int]:
    """Largest k for which element^k is unaffected by the degree cap (None: every k)."""
    if alg.degree_cap is None:
        return None
    load = max_load(alg, element)
    if load == 0:
        return None
    limit = alg.degree_cap // load
    bound = nilpotency_bound(alg, element)
    if bound is not None and limit >= bound:
        return None
    return limit


def nilpotent_powers(alg: Superalgebra, element: Element) -> List[Element]:
    """[1, V, V^2, ..., V^N] with V^(N+1) = 0 in the untruncated algebra.

    Raises:
        PreconditionError: If V is not nilpotent, or its nonzero powers do not fit under the cap
    """
    unit = alg.unit()
    if unit is None:
        raise PreconditionError(f"{alg.name} has no unit for exp", "unital")
    powers = [unit]
    if isinstance(alg, PolynomialSuperalgebra):
        bound = nilpotency_bound(alg, element)
        if bound is None:
            raise PreconditionError(f"{element} has a polynomial part and is not nilpotent", "nilpotent")
        if exact_power_limit(alg, element) is not None:
            raise PreconditionError(f"powers of {element} exceed the degree cap {alg.degree_cap}", "cap")
    else:
        bound = MAX_POWER
    while len(powers) <= bound + 1:
        nxt = alg.multiply(powers[-1], element)
        if nxt.is_zero():
            return powers
        powers.append(nxt)
    raise PreconditionError(f"{element} is not nilpotent within {bound} powers", "nilpotent")


def quartic_fixture(
    a: ScalarLike = 1, b: ScalarLike = 1, e: ScalarLike = -1, degree_cap: int = 4
) -> Tuple[GbvaInstance, Element, Fraction]:
    """W = a x3 t1 t2 + b x1 t3 t4 + e x1 x3 t1 t2 t3 t4 in the classical BV algebra on four pairs.

    Delta(W) = e (x3 t2 t3 t4 + x1 t1 t2 t4) and {W, W} = 2ab Delta(W) / e,
    so (W, 2ab/e) solves the master equation; (1, 1, -1) gives lambda = -2.
    """
    a, b, e = to_scalar(a), to_scalar(b), to_scalar(e)
    if e == 0:
        raise ValueError("the quartic coefficient must be nonzero")
    alg, delta = classical_bv_algebra(4, degree_cap)
    inst = make_gbva_instance(alg, delta, limit=1000)
    W = (
        alg.monomial([0, 0, 1, 0], (0, 1), a)
        + alg.monomial([1, 0, 0, 0], (2, 3), b)
        + alg.monomial([1, 0, 1, 0], (0, 1, 2, 3), e)
    )
    return inst, W, 2 * a * b / e
