"""The bc ghost system: Fock states, vertex operator modes and their identities."""
from .checks import (
    bc_gbva_instance,
    capped_tuples,
    check_anticommutators,
    check_g0_square_identity,
    check_l0_derivation,
    check_mode_order,
    check_mode_order_laws,
    check_phi2_expansion,
    check_primary_field,
    check_residue_derivation,
    commutator_check,
)
from .fock import BcVertexAlgebra, parse_modes
from .modes import bv_operator, generator_operator, l0_operator, mode_operator, stress_state, virasoro_operator

__all__ = [
    'BcVertexAlgebra',            # Fock space with the Wick product
    'parse_modes',                # "b(-2)c(1)|0>" -> [("b", -2), ("c", 1)]
    'mode_operator',              # u_(n), standard indexing
    'generator_operator',         # b_k, c_k, weight indexing
    'l0_operator',
    'virasoro_operator',
    'stress_state',
    'bv_operator',                # b_0
    'capped_tuples',
    'commutator_check',
    'check_anticommutators',
    'check_primary_field',
    'check_mode_order',
    'check_phi2_expansion',
    'check_l0_derivation',
    'check_residue_derivation',
    'check_mode_order_laws',
    'check_g0_square_identity',
    'bc_gbva_instance',
]
