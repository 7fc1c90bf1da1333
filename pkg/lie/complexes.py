"""Chevalley-Eilenberg complexes realized as operators on exterior algebras.

The chain space is S(g) (x) Lambda(g) (symmetric module) or Lambda(g)
(trivial module), stored as a polynomial superalgebra whose odd generators
are the basis of g (homology) or of g' (cohomology).
"""
import logging
from dataclasses import dataclass
from typing import Optional

from base.enums import ComplexCase, ModuleKind
from base.errors import AlgebraError, PreconditionError
from base.operators import LinOp, even_derivative, left_multiplication, odd_derivative, sum_operators, zero_operator
from base.polynomial import PolynomialSuperalgebra

from .clifford import EPS, IOTA, CliffordElement, Letter, clifford_normalize
from .data import LieAlgebraData, Vector

logger = logging.getLogger(__name__)


@dataclass
class ComplexSpec:
    """A Lie complex: which case, which module, and the chain algebra."""

    lie: LieAlgebraData
    case: ComplexCase
    module: ModuleKind
    alg: PolynomialSuperalgebra

    @property
    def symmetric_dim(self) -> int:
        return self.alg.n_even


def build_complex(
    lie: LieAlgebraData,
    case: ComplexCase,
    module: ModuleKind = ModuleKind.TRIVIAL,
    degree_cap: Optional[int] = None,
) -> ComplexSpec:
    """Create the chain algebra of a Lie complex.

    Args:
        lie: Lie algebra
        case: Homology (boundary, iota creates) or cohomology (coboundary, eps creates)
        module: Trivial module or the symmetric algebra S(g) with the adjoint action
        degree_cap: Symmetric degree cap (required for the symmetric module)
    """
    if case == ComplexCase.HOMOLOGY:
        odd_names = list(lie.names)
    else:
        odd_names = [f"{n}_dual" for n in lie.names]
    if module == ModuleKind.SYMMETRIC:
        if degree_cap is None:
            raise AlgebraError("the symmetric module needs a degree cap")
        alg = PolynomialSuperalgebra(
            lie.dim, lie.dim, degree_cap, [f"s_{n}" for n in lie.names], odd_names,
            name=f"S({lie.name})_{degree_cap}(x)Lambda",
        )
    else:
        alg = PolynomialSuperalgebra(0, lie.dim, None, [], odd_names, name=f"Lambda({lie.name}){'_dual' if case == ComplexCase.COHOMOLOGY else ''}")
    return ComplexSpec(lie, case, module, alg)


def letter_operator(spec: ComplexSpec, letter: Letter) -> LinOp:
    """iota(e_i) and eps(e_i') as operators on the chain algebra."""
    kind, i = letter
    alg = spec.alg
    multiplies = (kind == IOTA) == (spec.case == ComplexCase.HOMOLOGY)
    if multiplies:
        return left_multiplication(alg, alg.odd_generator(i), f"{kind}({spec.lie.names[i]})")
    return odd_derivative(alg, i, f"{kind}({spec.lie.names[i]})")


def clifford_operator(spec: ComplexSpec, element: CliffordElement, label: str, degree: int = 0) -> LinOp:
    normal = clifford_normalize(element, spec.case)
    return normal.to_operator(lambda letter: letter_operator(spec, letter), label, degree)


def module_action(spec: ComplexSpec, i: int) -> LinOp:
    """pi(e_i): adjoint derivation on S(g), zero on the trivial module."""
    alg = spec.alg
    if spec.module == ModuleKind.TRIVIAL:
        return zero_operator(0, f"pi({spec.lie.names[i]})")
    pieces = []
    for j in range(spec.lie.dim):
        for k, c in spec.lie.bracket_basis(i, j).items():
            pieces.append(left_multiplication(alg, alg.even_generator(k)).compose(even_derivative(alg, j)).scaled(c))
    return sum_operators(pieces, 0, f"pi({spec.lie.names[i]})")


def iota(spec: ComplexSpec, x: Vector) -> CliffordElement:
    result = CliffordElement()
    for i, c in x.items():
        result = result + CliffordElement.letter(IOTA, i, c)
    return result


def rho_clifford(spec: ComplexSpec, x: Vector) -> CliffordElement:
    """Clifford expression of the coadjoint/adjoint action rho(x) on the exterior part."""
    lie = spec.lie
    result = CliffordElement()
    for i in range(lie.dim):
        bracket = lie.bracket(x, {i: 1})
        eps_i = CliffordElement.letter(EPS, i)
        if spec.case == ComplexCase.HOMOLOGY:
            result = result + iota(spec, bracket) * eps_i
        else:
            result = result + (eps_i * iota(spec, bracket)).scale(-1)
    return result


def differential_clifford(spec: ComplexSpec) -> CliffordElement:
    """Clifford part of the boundary (homology) or coboundary (cohomology)."""
    lie = spec.lie
    result = CliffordElement()
    for i in range(lie.dim):
        for j in range(i + 1, lie.dim):
            bracket = iota(spec, lie.bracket_basis(i, j))
            eps_i, eps_j = CliffordElement.letter(EPS, i), CliffordElement.letter(EPS, j)
            if spec.case == ComplexCase.HOMOLOGY:
                result = result + bracket * eps_j * eps_i
            else:
                result = result + eps_j * eps_i * bracket
    return result


def rho_operator(spec: ComplexSpec, x: Vector) -> LinOp:
    return clifford_operator(spec, rho_clifford(spec, x), f"rho({_vector_label(spec, x)})")


def theta_operator(spec: ComplexSpec, x: Vector) -> LinOp:
    """theta(x) = pi(x) + rho(x), the total action of x on the chains."""
    pi = sum_operators([module_action(spec, i).scaled(c) for i, c in x.items()], 0, "pi")
    op = pi + rho_operator(spec, x)
    op.label = f"theta({_vector_label(spec, x)})"
    return op


def chevalley_boundary(spec: ComplexSpec) -> LinOp:
    """d = sum_i pi(e_i) eps(e_i') + sum_{i<j} iota([e_i, e_j]) eps(e_j') eps(e_i') on chains."""
    if spec.case != ComplexCase.HOMOLOGY:
        raise PreconditionError("the boundary lives on the homology complex", "case")
    return _differential(spec, "boundary")


def chevalley_coboundary(spec: ComplexSpec) -> LinOp:
    """d = sum_i pi(e_i) eps(e_i') + sum_{i<j} eps(e_j') eps(e_i') iota([e_i, e_j]) on cochains."""
    if spec.case != ComplexCase.COHOMOLOGY:
        raise PreconditionError("the coboundary lives on the cohomology complex", "case")
    return _differential(spec, "coboundary")


def complex_operator(spec: ComplexSpec) -> LinOp:
    return _differential(spec, "boundary" if spec.case == ComplexCase.HOMOLOGY else "coboundary")


def _differential(spec: ComplexSpec, label: str) -> LinOp:
    degree = -1 if spec.case == ComplexCase.HOMOLOGY else 1
    pieces = []
    if spec.module == ModuleKind.SYMMETRIC:
        for i in range(spec.lie.dim):
            pieces.append(module_action(spec, i).compose(letter_operator(spec, (EPS, i))))
    pieces.append(clifford_operator(spec, differential_clifford(spec), "clifford", degree))
    op = sum_operators(pieces, degree, label)
    logger.debug(f"built {label} for {spec.alg.name}")
    return op


def _vector_label(spec: ComplexSpec, x: Vector) -> str:
    return "+".join(f"{c}{spec.lie.names[i]}" if c != 1 else spec.lie.names[i] for i, c in sorted(x.items()))
