"""Polynomial multivector fields on affine n-space.

A multivector p(x) d_i1 ^ ... ^ d_ik is stored as a monomial of a polynomial
superalgebra with even generators x1..xn and odd generators d1..dn, so the
wedge product is the algebra product and a k-vector has superdegree k.
"""
from typing import List

from base.elements import Element
from base.errors import AlgebraError
from base.operators import LinOp, even_derivative, odd_derivative, sum_operators
from base.polynomial import PolynomialSuperalgebra


def multivector_algebra(n: int, poly_cap: int) -> PolynomialSuperalgebra:
    if n < 1:
        raise AlgebraError("ambient dimension must be positive")
    return PolynomialSuperalgebra(
        n, n, poly_cap,
        [f"x{i + 1}" for i in range(n)],
        [f"d{i + 1}" for i in range(n)],
        name=f"multivectors(R^{n})_{poly_cap}",
    )


def require_same_space(alg: PolynomialSuperalgebra, *elements: Element) -> None:
    for element in elements:
        if not all(alg.owns(w) for w in element.words()):
            raise AlgebraError(f"multivector {element} does not live on {alg.name}")


def is_function(element: Element) -> bool:
    return all(w.degree == 0 for w in element.words())


def partial(alg: PolynomialSuperalgebra, i: int) -> LinOp:
    """d/dx_i acting on coefficients."""
    return even_derivative(alg, i, f"d/dx{i + 1}")


def contraction(alg: PolynomialSuperalgebra, i: int) -> LinOp:
    """iota(dx_i), the left contraction removing d_i."""
    return odd_derivative(alg, i, f"iota(dx{i + 1})")


def interior_df(alg: PolynomialSuperalgebra, f: Element, u: Element) -> Element:
    """iota(df) u = sum_i (df/dx_i) iota(dx_i) u."""
    if not is_function(f):
        raise AlgebraError(f"{f} is not a function")
    result = Element()
    for i in range(alg.n_even):
        df = partial(alg, i).apply(f)
        if df.is_zero():
            continue
        result = result + alg.multiply(df, contraction(alg, i).apply(u))
    return result


def components(alg: PolynomialSuperalgebra, field: Element) -> List[Element]:
    """Coefficient functions X_i of a vector field X = sum_i X_i d_i."""
    parts = [Element() for _ in range(alg.n_odd)]
    for word, coeff in field.items():
        exps, odds = word.key
        if len(odds) != 1:
            raise AlgebraError(f"{field} is not a vector field")
        parts[odds[0]] = parts[odds[0]] + Element.from_word(alg.word(exps), coeff)
    return parts


def apply_field(alg: PolynomialSuperalgebra, field: Element, f: Element) -> Element:
    """X(f) = sum_i X_i df/dx_i."""
    result = Element()
    for i, coefficient in enumerate(components(alg, field)):
        if not coefficient.is_zero():
            result = result + alg.multiply(coefficient, partial(alg, i).apply(f))
    return result


def vector_field_bracket(alg: PolynomialSuperalgebra, X: Element, Y: Element) -> Element:
    """[X, Y] = X(Y) - Y(X) computed on coefficient functions."""
    result = Element()
    for j, (x_j, y_j) in enumerate(zip(components(alg, X), components(alg, Y))):
        coefficient = apply_field(alg, X, y_j) - apply_field(alg, Y, x_j)
        result = result + alg.multiply(coefficient, alg.odd_generator(j))
    return result


def divergence(alg: PolynomialSuperalgebra, field: Element) -> Element:
    return sum((partial(alg, i).apply(c) for i, c in enumerate(components(alg, field))), Element())


def d_nabla(alg: PolynomialSuperalgebra) -> LinOp:
    """Generating operator of the flat connection: -sum_i (d/dx_i)(iota(dx_i)).

    On vector fields it is minus the divergence; it lowers the multivector
    degree by one.
    """
    pieces = [partial(alg, i).compose(contraction(alg, i)) for i in range(alg.n_even)]
    op = sum_operators(pieces, -1, "D_nabla").scaled(-1)
    op.label = "D_nabla"
    return op
