"""Generalized BV algebras: generated brackets and their identities."""
from .bracket import bv_bracket, tilde_phi2
from .classical import classical_bv_algebra, classical_bv_instance, classical_bv_operator
from .dbva import check_induced_product, cohomology_representatives, euler_dbva_example, verify_dbva
from .identities import (
    check_d_derivation,
    check_gbva_identities,
    check_general_identities,
    check_gerstenhaber_axioms,
    check_leibniz,
)
from .instance import GbvaFlags, GbvaInstance, make_gbva_instance

__all__ = [
    'GbvaInstance',               # Algebra plus checked odd operator
    'GbvaFlags',
    'make_gbva_instance',
    'bv_bracket',                 # {a, b} = (-1)^|a| Phi^2(a, b)
    'tilde_phi2',
    'classical_bv_algebra',
    'classical_bv_instance',
    'classical_bv_operator',
    'check_gbva_identities',
    'check_general_identities',
    'check_d_derivation',
    'check_leibniz',
    'check_gerstenhaber_axioms',
    'verify_dbva',
    'cohomology_representatives',
    'check_induced_product',
    'euler_dbva_example',
]
