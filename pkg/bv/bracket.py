"""Brackets generated by an operator."""
from base.algebra import Superalgebra
from base.elements import Element
from base.errors import HomogeneityError
from base.operators import LinOp
from base.scalars import sign
from diffops.phi import STANDARD_SIGNS, PhiSigns, phi_form_multilinear


def bv_bracket(
    alg: Superalgebra,
    delta: LinOp,
    a: Element,
    b: Element,
    signs: PhiSigns = STANDARD_SIGNS,
) -> Element:
    """{a, b} = (-1)^{|a|} Phi^2_Delta(a, b).

    ``a`` must be parity-homogeneous; ``b`` is split over its parity parts.
    """
    if not a.is_parity_homogeneous():
        raise HomogeneityError("first bracket argument is not homogeneous", 0)
    if a.is_zero() or b.is_zero():
        return Element()
    value = phi_form_multilinear(alg, delta, [a, b], signs=signs)
    return value.scale(signs.bracket * sign(a.parity()))


def tilde_phi2(
    alg: Superalgebra,
    delta: LinOp,
    a: Element,
    b: Element,
    signs: PhiSigns = STANDARD_SIGNS,
) -> Element:
    """Phi-tilde^2(a, b) = Delta([a, b]) - [Delta a, b] - (-1)^{|a||Delta|} [a, Delta b].

    Measures how far Delta is from a derivation of the supercommutator.
    """
    if not a.is_parity_homogeneous():
        raise HomogeneityError("first argument is not homogeneous", 0)
    comm = alg.supercommutator
    return (
        delta.apply(comm(a, b))
        - comm(delta.apply(a), b)
        - comm(a, delta.apply(b)).scale(sign(a.parity() * delta.parity))
    )
