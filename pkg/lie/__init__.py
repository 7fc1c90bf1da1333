"""Lie algebra (co)homology complexes as BV-type operators on exterior algebras."""
from .checks import (
    boundary_factorization_check,
    cartan_identity_check,
    check_boundary_order,
    check_bracket_sign,
    check_rho_derivation,
    iota_epsilon_bv_check,
    lie_leibniz_check,
)
from .clifford import CliffordElement, clifford_normalize
from .complexes import ComplexSpec, build_complex, chevalley_boundary, chevalley_coboundary, complex_operator
from .data import BUILTIN_LIE_ALGEBRAS, LieAlgebraData, abelian, builtin_lie_algebra, nonabelian_2d, sl2
from .homology import homology, homology_dimensions
from .weil import invariant_dimensions, weil_prime_homology

__all__ = [
    'LieAlgebraData',                # Structure constants with a Jacobi check
    'sl2',
    'abelian',
    'nonabelian_2d',
    'builtin_lie_algebra',
    'BUILTIN_LIE_ALGEBRAS',
    'CliffordElement',               # Words in iota/eps letters
    'clifford_normalize',
    'ComplexSpec',
    'build_complex',
    'chevalley_boundary',
    'chevalley_coboundary',
    'complex_operator',
    'homology',                      # Dimensions per grade by exact rank
    'homology_dimensions',
    'cartan_identity_check',
    'check_boundary_order',
    'boundary_factorization_check',
    'iota_epsilon_bv_check',
    'check_rho_derivation',
    'check_bracket_sign',
    'lie_leibniz_check',
    'invariant_dimensions',
    'weil_prime_homology',
]
