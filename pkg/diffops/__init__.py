"""Phi-forms, differential order classification and the order laws."""
from .order import check_order_laws, classify_order
from .phi import PhiSigns, phi4_explicit, phi_form, phi_form_koszul, phi_form_multilinear, phi_partial_operator
from .sweep import sweep_domain, sweep_tuples

__all__ = [
    'phi_form',               # Recursive Phi-form
    'phi_form_multilinear',   # Same, split over parity parts
    'phi_form_koszul',        # Koszul-sign variant for classical algebras
    'phi4_explicit',          # Fifteen-term Phi^4 oracle
    'phi_partial_operator',   # Phi with leading slots fixed, as an operator
    'PhiSigns',
    'classify_order',
    'check_order_laws',
    'sweep_domain',
    'sweep_tuples',
]
