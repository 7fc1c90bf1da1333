"""The classical BV algebra Q[x_1..x_n] (x) Lambda(theta_1..theta_n)."""
from typing import Tuple

from base.operators import LinOp, even_derivative, odd_derivative, sum_operators
from base.polynomial import PolynomialSuperalgebra

from .instance import GbvaInstance, make_gbva_instance


def classical_bv_operator(alg: PolynomialSuperalgebra) -> LinOp:
    """Delta = sum_i d/dx_i d/dtheta_i."""
    n = min(alg.n_even, alg.n_odd)
    return sum_operators(
        (even_derivative(alg, i).compose(odd_derivative(alg, i)) for i in range(n)),
        -alg.odd_degree,
        "sum d/dx d/dtheta",
    )


def classical_bv_algebra(n: int, degree_cap: int) -> Tuple[PolynomialSuperalgebra, LinOp]:
    alg = PolynomialSuperalgebra(n, n, degree_cap, name=f"BV[{n}]_{degree_cap}")
    return alg, classical_bv_operator(alg)


def classical_bv_instance(n: int, degree_cap: int) -> GbvaInstance:
    alg, delta = classical_bv_algebra(n, degree_cap)
    return make_gbva_instance(alg, delta)
