"""Cross-checks between the Phi-form evaluators."""
from typing import Optional

from base.algebra import Superalgebra
from base.operators import LinOp
from base.random_gen import random_homogeneous
from base.reports import IdentityReport, ResidualCollector
from base.scalars import derive_seed

from .phi import STANDARD_SIGNS, PhiSigns, phi4_explicit, phi_form, phi_form_koszul, phi_partial_operator


def _load_bound(alg: Superalgebra, arity: int, headroom: int = 1) -> Optional[int]:
    if alg.degree_cap is None:
        return None
    return max(alg.degree_cap - headroom, 0) // arity


def check_phi_agreement(
    alg: Superalgebra,
    delta: LinOp,
    r_max: int = 5,
    samples: int = 40,
    seed: int = 0,
    unital_adjust: bool = False,
    signs: PhiSigns = STANDARD_SIGNS,
) -> IdentityReport:
    """Recursive Phi^r against the Koszul-sign formula for r = 1..r_max.

    With ``unital_adjust`` the two agree for every operator; without it they
    agree when Delta(1) = 0.
    """
    collector = ResidualCollector(f"phi-recursive=koszul[{delta.label}]")
    for r in range(1, r_max + 1):
        bound = _load_bound(alg, r)
        for i in range(samples):
            args = [random_homogeneous(alg, derive_seed(seed, "agree", r, i, j), load_bound=bound) for j in range(r)]
            lhs = phi_form(alg, delta, args, unital_adjust, signs)
            rhs = phi_form_koszul(alg, delta, args)
            collector.record(args, lhs, rhs)
    return collector.report({"r_max": r_max, "unital_adjust": unital_adjust})


def check_phi4_explicit(
    alg: Superalgebra, delta: LinOp, samples: int = 40, seed: int = 0
) -> IdentityReport:
    """Explicit fifteen-term Phi^4 against the recursive definition."""
    collector = ResidualCollector(f"phi4-explicit[{delta.label}]")
    bound = _load_bound(alg, 4)
    for i in range(samples):
        args = [random_homogeneous(alg, derive_seed(seed, "phi4", i, j), load_bound=bound) for j in range(4)]
        collector.record(args, phi4_explicit(alg, delta, *args), phi_form(alg, delta, args))
    return collector.report()


def check_nesting(
    alg: Superalgebra, delta: LinOp, samples: int = 20, seed: int = 0
) -> IdentityReport:
    """Phi^{m+k}(a_1..a_m, b_1..b_k) equals Phi^k of the partial operator Phi^{m+1}(a_1..a_m, -).

    Covers m in {1, 2} and k in {1, 2}, so Phi^{r+1} is seen to measure how far
    Phi^r with all but one slot fixed is from a derivation.
    """
    collector = ResidualCollector(f"phi-nesting[{delta.label}]")
    for m in (1, 2):
        for k in (1, 2):
            bound = _load_bound(alg, m + k)
            for i in range(samples):
                args = [
                    random_homogeneous(alg, derive_seed(seed, "nest", m, k, i, j), load_bound=bound)
                    for j in range(m + k)
                ]
                fixed, free = args[:m], args[m:]
                partial = phi_partial_operator(alg, delta, fixed)
                collector.record(fixed + free, phi_form(alg, delta, fixed + free), phi_form(alg, partial, free))
    return collector.report()
