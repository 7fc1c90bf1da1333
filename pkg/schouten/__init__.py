"""Multivector fields, the Schouten-Nijenhuis bracket and its generating operator."""
from .bracket import sn_bracket
from .checks import check_gerstenhaber, check_sn_generation, check_vector_field_oracle
from .multivector import d_nabla, divergence, interior_df, multivector_algebra, vector_field_bracket

__all__ = [
    'multivector_algebra',        # Q[x] (x) Lambda[d], wedge = product
    'sn_bracket',
    'd_nabla',                    # -sum_i d/dx_i iota(dx_i)
    'interior_df',
    'vector_field_bracket',
    'divergence',
    'check_sn_generation',
    'check_gerstenhaber',
    'check_vector_field_oracle',
]
