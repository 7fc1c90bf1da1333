"""The Schouten-Nijenhuis bracket of polynomial multivector fields."""
from fractions import Fraction
from typing import List, Tuple

from base.elements import BasisWord, Element
from base.polynomial import PolynomialSuperalgebra
from base.scalars import sign

from .multivector import interior_df, require_same_space, vector_field_bracket


def _factors(alg: PolynomialSuperalgebra, word: BasisWord, coeff: Fraction) -> Tuple[Element, List[Element]]:
    """Split c * p(x) d_i1 ... d_ik into a function and vector fields whose wedge is the word.

    The function rides on the first vector field; with no vector fields the
    function is returned alone.
    """
    exps, odds = word.key
    f = Element.from_word(alg.word(exps), coeff)
    if not odds:
        return f, []
    fields = [alg.multiply(f, alg.odd_generator(odds[0]))]
    fields.extend(alg.odd_generator(i) for i in odds[1:])
    return f, fields


def _word_bracket(alg: PolynomialSuperalgebra, left: Tuple[BasisWord, Fraction], right: Tuple[BasisWord, Fraction]) -> Element:
    f, xs = _factors(alg, *left)
    g, ys = _factors(alg, *right)
    if not xs and not ys:
        return Element()
    v = Element.from_word(*right)
    u = Element.from_word(*left)
    if not xs:
        return -interior_df(alg, f, v)
    if not ys:
        return interior_df(alg, g, u).scale(-sign(len(xs)))
    result = Element()
    for a, x in enumerate(xs):
        rest_x = xs[:a] + xs[a + 1:]
        for b, y in enumerate(ys):
            rest_y = ys[:b] + ys[b + 1:]
            term = alg.product([vector_field_bracket(alg, x, y)] + rest_x + rest_y)
            result = result + term.scale(sign(a + b))
    return result


def sn_bracket(alg: PolynomialSuperalgebra, u: Element, v: Element) -> Element:
    """[u, v] for multivectors, bilinear in both arguments.

    Decomposables follow
    [X1^..^Xp, Y1^..^Yq] = sum_ij (-1)^{i+j} [Xi, Yj] ^ X1..^Xi..^Xp ^ Y1..^Yj..^Yq,
    and functions follow [f, u] = -iota(df) u and [u, f] = (-1)^{|u|} [f, u].

    Raises:
        AlgebraError: If an argument lives on a different space
    """
    require_same_space(alg, u, v)
    result = Element()
    for left in u.items():
        for right in v.items():
            result = result + _word_bracket(alg, left, right)
    return result
