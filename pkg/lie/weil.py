"""Homology of S(g) (x) Lambda(g) with the symmetric-module boundary."""
import logging
from typing import Dict

from base.enums import CheckStatus, ComplexCase, ModuleKind
from base.linalg import kernel
from base.reports import TableReport
from diffops.order import classify_order

from .complexes import build_complex, chevalley_boundary, module_action, rho_operator
from .data import LieAlgebraData
from .homology import bigrading, exterior_degree, homology, homology_dimensions, symmetric_degree

logger = logging.getLogger(__name__)


def invariant_dimensions(lie: LieAlgebraData, degree_cap: int) -> Dict[str, Dict[int, int]]:
    """Dimensions of the g-invariants in S^p(g) and Lambda^q(g)."""
    spec = build_complex(lie, ComplexCase.HOMOLOGY, ModuleKind.SYMMETRIC, degree_cap)
    words = spec.alg.basis()
    pi_ops = [module_action(spec, i) for i in range(lie.dim)]
    rho_ops = [rho_operator(spec, {i: 1}) for i in range(lie.dim)]
    symmetric = {}
    for p in range(degree_cap + 1):
        block = [w for w in words if exterior_degree(w) == 0 and symmetric_degree(w) == p]
        symmetric[p] = len(kernel(pi_ops, block))
    exterior = {}
    for q in range(lie.dim + 1):
        block = [w for w in words if symmetric_degree(w) == 0 and exterior_degree(w) == q]
        exterior[q] = len(kernel(rho_ops, block))
    return {"symmetric": symmetric, "exterior": exterior}


def weil_prime_homology(lie: LieAlgebraData, degree_cap: int = 2, order_limit: int = 600, seed: int = 0) -> TableReport:
    """Bigraded homology of S(g) (x) Lambda(g) against inv(S^p) * inv(Lambda^q).

    Also checks that the boundary squares to zero and has order at most 2.
    For a semisimple g the homology equals the invariants; for other algebras
    the comparison is reported but not asserted.
    """
    if degree_cap < 2:
        logger.warning(f"symmetric degree cap {degree_cap} < 2 misses the quadratic invariants of {lie.name}")
    spec = build_complex(lie, ComplexCase.HOMOLOGY, ModuleKind.SYMMETRIC, degree_cap)
    boundary = chevalley_boundary(spec)
    words = spec.alg.basis()
    report = homology(boundary, words, bigrading, name=f"weil-prime-homology[{lie.name}]")
    dims = homology_dimensions(report)
    invariants = invariant_dimensions(lie, degree_cap)
    rows = []
    ok = True
    for (p, q), h in sorted(dims.items()):
        expected = invariants["symmetric"][p] * invariants["exterior"][q]
        match = h == expected
        ok = ok and (match or not lie.semisimple)
        rows.append({"grade": [p, q], "homology": h, "expected": expected, "ok": match})
    order = classify_order(spec.alg, boundary, 2, domain=words, limit=order_limit, seed=seed)
    order_ok = order.order is not None and order.order <= 2
    status = CheckStatus.PASS if ok and order_ok else CheckStatus.FAIL
    return TableReport(
        name=report.name,
        status=status,
        rows=rows,
        details={
            "degree_cap": degree_cap,
            "order": order.order,
            "order_exhaustive": order.exhaustive,
            "semisimple": lie.semisimple,
            "invariants": {k: {str(d): v for d, v in inv.items()} for k, inv in invariants.items()},
        },
    )
