"""Phi-forms (higher order derivations) of an operator on a superalgebra."""
import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence

from base.algebra import Superalgebra
from base.elements import Element
from base.errors import HomogeneityError, PreconditionError
from base.operators import LinOp
from base.scalars import sign


@dataclass(frozen=True)
class PhiSigns:
    """Coefficients of the three recursion terms and of the bracket.

    The defaults give the standard forms. Other values exist only so that
    mutation checks can show the identity checkers notice a flipped sign.
    """

    product: int = 1
    left: int = -1
    right: int = -1
    bracket: int = 1


STANDARD_SIGNS = PhiSigns()


def _parities(args: Sequence[Element]) -> List[int]:
    parities = []
    for index, arg in enumerate(args):
        if not arg.is_parity_homogeneous():
            raise HomogeneityError(f"argument {index + 1} of a Phi-form is not homogeneous", index)
        parities.append(arg.parity())
    return parities


def phi_form(
    alg: Superalgebra,
    delta: LinOp,
    args: Sequence[Element],
    unital_adjust: bool = False,
    signs: PhiSigns = STANDARD_SIGNS,
) -> Element:
    """Evaluate Phi^r_Delta(a_1, ..., a_r) by the recursive definition.

    Phi^1(a) = Delta(a) (minus Delta(1) a when ``unital_adjust``) and
    Phi^{r+1}(..., a_r, a_{r+1}) = Phi^r(..., a_r a_{r+1}) - Phi^r(..., a_r) a_{r+1}
    - (-1)^{|a_r|(|Delta| + |a_1| + ... + |a_{r-1}|)} a_r Phi^r(..., a_{r+1}).

    Args:
        alg: Algebra supplying the product
        delta: Operator
        args: Parity-homogeneous arguments (r >= 1)
        unital_adjust: Subtract the Delta(1) term in Phi^1
        signs: Recursion coefficients

    Returns:
        Element: The value

    Raises:
        HomogeneityError: If an argument mixes parities
        PreconditionError: If unital_adjust is set on a non-unital algebra
    """
    if not args:
        raise ValueError("Phi-forms need at least one argument")
    parities = _parities(args)
    if unital_adjust and alg.unit() is None:
        raise PreconditionError(f"{alg.name} is not unital", "unital")
    return _phi(alg, delta, list(args), parities, unital_adjust, signs)


def _phi(alg, delta, args, parities, unital_adjust, signs) -> Element:
    if any(a.is_zero() for a in args):
        return Element()
    if len(args) == 1:
        value = delta.apply(args[0])
        if unital_adjust:
            value = value - alg.multiply(delta.apply(alg.unit()), args[0])
        return value
    head, head_par = args[:-2], parities[:-2]
    ar, anext = args[-2], args[-1]
    pr, pnext = parities[-2], parities[-1]
    product = alg.multiply(ar, anext)
    t1 = _phi(alg, delta, head + [product], head_par + [(pr + pnext) % 2], unital_adjust, signs)
    t2 = alg.multiply(_phi(alg, delta, head + [ar], head_par + [pr], unital_adjust, signs), anext)
    exponent = pr * (sum(head_par) + delta.parity)
    t3 = alg.multiply(ar, _phi(alg, delta, head + [anext], head_par + [pnext], unital_adjust, signs))
    return t1.scale(signs.product) + t2.scale(signs.left) + t3.scale(signs.right * sign(exponent))


def phi_form_multilinear(
    alg: Superalgebra,
    delta: LinOp,
    args: Sequence[Element],
    unital_adjust: bool = False,
    signs: PhiSigns = STANDARD_SIGNS,
) -> Element:
    """Phi-form extended multilinearly over the parity parts of each argument."""
    split = [list(a.parity_parts().values()) or [Element()] for a in args]
    result = Element()
    for parts in itertools.product(*split):
        result = result + phi_form(alg, delta, parts, unital_adjust, signs)
    return result


def phi_form_koszul(alg: Superalgebra, delta: LinOp, args: Sequence[Element]) -> Element:
    """Phi^r via m o (Delta (x) id) applied to prod_i (a_i (x) 1 - 1 (x) a_i).

    Only defined for supercommutative associative unital algebras.
    """
    flags = alg.flags
    if not flags.supercommutative:
        raise PreconditionError(f"{alg.name} is not supercommutative", "supercommutative")
    if not flags.associative:
        raise PreconditionError(f"{alg.name} is not associative", "associative")
    if not flags.unital:
        raise PreconditionError(f"{alg.name} is not unital", "unital")
    parities = _parities(args)
    r = len(args)
    result = Element()
    for mask in range(2 ** r):
        right = [i for i in range(r) if mask >> i & 1]
        left = [i for i in range(r) if not mask >> i & 1]
        exponent = len(right)
        right_parity = 0
        for i in range(r):
            if mask >> i & 1:
                right_parity += parities[i]
            else:
                exponent += right_parity * parities[i]
        left_value = delta.apply(alg.product([args[i] for i in left]))
        right_value = alg.product([args[i] for i in right])
        result = result + alg.multiply(left_value, right_value).scale(sign(exponent))
    return result


def phi4_explicit(alg: Superalgebra, delta: LinOp, a: Element, b: Element, c: Element, d: Element) -> Element:
    """Closed fifteen-term formula for Phi^4 on a classical algebra."""
    pa, pb, pc, pd = _parities([a, b, c, d])
    pD = delta.parity
    m = alg.product
    D = delta.apply
    terms = [
        (1, D(m([a, b, c, d]))),
        (-1, m([D(m([a, b, c])), d])),
        (-sign(pD * pa), m([a, D(m([b, c, d]))])),
        (-sign(pc * pd), m([D(m([a, b, d])), c])),
        (-sign(pb * (pc + pd)), m([D(m([a, c, d])), b])),
        (1, m([D(m([a, b])), c, d])),
        (sign(pb * pc), m([D(m([a, c])), b, d])),
        (sign(pd * (pb + pc)), m([D(m([a, d])), b, c])),
        (sign(pD * pa), m([a, D(m([b, c])), d])),
        (sign(pD * pa + pc * pd), m([a, D(m([b, d])), c])),
        (sign(pD * pa + pb * (pc + pd)), m([a, D(m([c, d])), b])),
        (-1, m([D(a), b, c, d])),
        (-sign(pD * pa), m([a, D(b), c, d])),
        (-sign(pD * (pa + pb)), m([a, b, D(c), d])),
        (-sign(pD * (pa + pb + pc)), m([a, b, c, D(d)])),
    ]
    result = Element()
    for coeff, value in terms:
        result = result + value.scale(coeff)
    return result


def phi_partial_operator(
    alg: Superalgebra,
    delta: LinOp,
    fixed: Sequence[Element],
    unital_adjust: bool = False,
    signs: PhiSigns = STANDARD_SIGNS,
) -> LinOp:
    """The operator b -> Phi^{m+1}(a_1, ..., a_m, b) for fixed a_1..a_m."""
    parities = _parities(fixed)
    degree = None
    if delta.degree is not None and all(f.is_homogeneous() for f in fixed):
        degree = delta.degree + sum(f.degree() or 0 for f in fixed)
    label = f"Phi[{delta.label}]({', '.join(str(f) for f in fixed)}, -)"
    return LinOp(
        lambda w: phi_form(alg, delta, list(fixed) + [Element.from_word(w)], unital_adjust, signs),
        degree,
        label,
        parity=delta.parity + sum(parities),
    )


def phi_value_degree(delta: LinOp, args: Sequence[Element]) -> Optional[int]:
    if delta.degree is None:
        return None
    degrees = [a.degree() for a in args]
    if any(d is None for d in degrees):
        return None
    return delta.degree + sum(degrees)
