"""Base package: exact graded algebras, elements and linear operators."""
from .algebra import AlgebraFlags, Superalgebra
from .elements import BasisWord, Element
from .errors import (
    AlgebraError,
    ConfigError,
    ConsistencyError,
    HomogeneityError,
    KernelError,
    PreconditionError,
)
from .operators import LinOp, apply_operator, supercommutator
from .polynomial import PolynomialSuperalgebra, make_polynomial_superalgebra
from .reports import IdentityReport, OrderReport, TableReport
from .structure import StructureConstantAlgebra, random_structure_algebra

__all__ = [
    'Superalgebra',                  # Abstract graded algebra with a finite basis
    'AlgebraFlags',                  # Declared laws consulted by checkers
    'BasisWord',                     # Canonical basis element
    'Element',                       # Rational linear combination of words
    'LinOp',                         # Linear operator with a degree shift
    'apply_operator',
    'supercommutator',
    'PolynomialSuperalgebra',        # Q[x] (x) Lambda[theta], truncated
    'make_polynomial_superalgebra',
    'StructureConstantAlgebra',      # Algebra from a product table
    'random_structure_algebra',
    'IdentityReport',
    'OrderReport',
    'TableReport',
    'KernelError',
    'AlgebraError',
    'HomogeneityError',
    'ConsistencyError',
    'PreconditionError',
    'ConfigError',
]
