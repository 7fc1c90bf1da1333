"""The quantum master equation {W, W} = lambda Delta(W) and its consequences."""
from .candidates import MasterCandidate, nilpotent_powers, quartic_fixture
from .deformation import check_deformation, deform_delta
from .lemmas import check_power_lemmas, classical_master, exp_check, phi_expansion_check
from .search import check_master_tower, search_master_solutions
from .weights import check_weight_obstruction

__all__ = [
    'MasterCandidate',            # even W with a proposed lambda
    'quartic_fixture',            # nontrivial solution in four variable pairs
    'nilpotent_powers',
    'check_power_lemmas',
    'exp_check',
    'phi_expansion_check',
    'classical_master',           # {S, S} = 0
    'deform_delta',               # Delta + {a, -}
    'check_deformation',
    'check_weight_obstruction',
    'search_master_solutions',
    'check_master_tower',
]
