"""Mode operators, the weight operator and the stress state of the bc system."""
from typing import Optional

from base.elements import Element
from base.errors import HomogeneityError
from base.operators import LinOp, diagonal_operator

from .fock import FIELD_MODE, BcVertexAlgebra, to_standard


def mode_operator(alg: BcVertexAlgebra, u: Element, n: int, label: Optional[str] = None) -> LinOp:
    """u_(n) as a linear operator (standard indexing).

    Raises:
        HomogeneityError: If u mixes ghost numbers or weights
    """
    degree = u.degree()
    if degree is None:
        degree = 0
    weight = u.weight()
    shift = weight - n - 1 if weight is not None else None
    return LinOp(
        lambda w: alg.mode_apply(u, n, Element.from_word(w)),
        degree,
        label or f"({_short(u)})_({n})",
        weight_shift=shift,
    )


def weight_mode_operator(alg: BcVertexAlgebra, u: Element, k: int, label: Optional[str] = None) -> LinOp:
    """u_k in weight indexing, u_k = u_(k + wt(u) - 1)."""
    weight = u.weight()
    if weight is None:
        raise HomogeneityError("the zero state has no weight indexing")
    n = k + int(weight) - 1
    return mode_operator(alg, u, n, label or f"({_short(u)})_{k}")


def generator_operator(alg: BcVertexAlgebra, gen: str, k: int) -> LinOp:
    """b_k or c_k (weight indexing)."""
    return mode_operator(alg, alg.field_state(gen), to_standard(gen, k), f"{gen}_{k}")


def l0_operator(alg: BcVertexAlgebra) -> LinOp:
    """The weight-reading operator."""
    return diagonal_operator(lambda w: w.weight, "L_0")


def stress_state(alg: BcVertexAlgebra) -> Element:
    """L = -:(db) c: - 2 :b (dc):, as the state -b_{-3} c_1|0> - 2 b_{-2} c_0|0>."""
    b_mode, c_mode = FIELD_MODE["b"], FIELD_MODE["c"]
    return (
        alg.state([("b", b_mode[1] - 1), c_mode]).scale(-1)
        + alg.state([b_mode, ("c", c_mode[1] - 1)]).scale(-2)
    )


def virasoro_operator(alg: BcVertexAlgebra, m: int) -> LinOp:
    """L_m = L_(m+1)."""
    return mode_operator(alg, stress_state(alg), m + 1, f"L_{m}")


def bv_operator(alg: BcVertexAlgebra) -> LinOp:
    """Delta = b_0 = b_(1), odd and square zero."""
    return generator_operator(alg, "b", 0)


def _short(u: Element) -> str:
    words = u.words()
    if len(words) == 1 and u.coefficient(words[0]) == 1:
        return str(words[0])
    return f"[{u}]"

