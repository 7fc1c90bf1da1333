"""Registry of the check suites a job can name.

Every suite has a ``prepare`` step, run before any job starts, that turns the
job's params into kernel objects (so a bad expression is a configuration
error), and a ``run`` step that returns a list of reports.
"""
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from base.enums import CheckStatus, ComplexCase
from base.errors import ConfigError
from base.random_gen import random_operator
from base.reports import Counterexample, IdentityReport, TableReport, refused
from base.scalars import derive_seed, format_scalar
from base.structure import random_structure_algebra
from bv.dbva import verify_dbva
from bv.identities import check_d_derivation, check_gbva_identities, check_general_identities
from bv.instance import GbvaInstance, make_gbva_instance
from diffops.checks import check_nesting, check_phi4_explicit, check_phi_agreement
from diffops.order import check_order_laws, classify_order
from diffops.phi import STANDARD_SIGNS, PhiSigns
from diffops.sweep import DEFAULT_TUPLE_LIMIT
from lie.checks import (
    cartan_identity_check,
    check_boundary_order,
    check_bracket_sign,
    check_rho_derivation,
    iota_epsilon_bv_check,
    lie_leibniz_check,
)
from lie.complexes import build_complex, complex_operator
from lie.homology import homology, homology_dimensions
from lie.weil import weil_prime_homology
from master.candidates import MasterCandidate
from master.deformation import check_deformation
from master.lemmas import check_power_lemmas, classical_master, exp_check, phi_expansion_check
from master.search import check_master_tower, search_master_solutions
from master.weights import check_weight_obstruction
from schouten.checks import check_gerstenhaber, check_sn_generation, check_vector_field_oracle
from vosa.checks import (
    DEFAULT_LIMIT,
    check_anticommutators,
    check_g0_square_identity,
    check_l0_derivation,
    check_mode_order,
    check_mode_order_laws,
    check_phi2_expansion,
    check_primary_field,
    check_residue_derivation,
)

from .builders import Workspace
from .config import JobSpec
from .expressions import parse_element, parse_elements, parse_scalar

logger = logging.getLogger(__name__)

Inputs = Dict[str, Any]
ALL_KINDS = ("polynomial", "classical-bv", "multivector", "structure", "random-structure", "lie", "bc", "euler-dbva")
CLASSICAL_KINDS = ("classical-bv", "multivector")


@dataclass(frozen=True)
class SuiteEntry:
    """A named suite: the algebra kinds it accepts and its two steps."""

    name: str
    kinds: Tuple[str, ...]
    run: Callable[[JobSpec, Workspace, Inputs], List[Any]]
    prepare: Optional[Callable[[JobSpec, Workspace], Inputs]] = None
    description: str = ""

    def resolve(self, job: JobSpec, ws: Workspace) -> Inputs:
        if ws.kind not in self.kinds:
            raise ConfigError(
                f"job {job.name}: suite {self.name} does not run on {ws.kind} algebras "
                f"(accepted: {', '.join(self.kinds)})"
            )
        return self.prepare(job, ws) if self.prepare else {}


JOB_SUITES: Dict[str, SuiteEntry] = {}


def job_suite(name: str, kinds: Sequence[str] = ALL_KINDS, prepare=None, description: str = ""):
    """Register the decorated function as the run step of suite ``name``."""

    def register(func):
        JOB_SUITES[name] = SuiteEntry(name, tuple(kinds), func, prepare, description)
        return func

    return register


def get_suite(name: str) -> SuiteEntry:
    entry = JOB_SUITES.get(name)
    if entry is None:
        raise ConfigError(f"unknown suite {name!r} (known: {', '.join(sorted(JOB_SUITES))})")
    return entry


# -- shared helpers ------------------------------------------------------------


MUTATIONS = ("product", "left", "right", "bracket")


def mutated_signs(mutation: str) -> PhiSigns:
    return PhiSigns(**{mutation: -getattr(STANDARD_SIGNS, mutation)})


def phi_signs(job: JobSpec) -> PhiSigns:
    """Recursion signs, with one coefficient flipped when the job asks for a mutation."""
    mutation = job.param("mutation")
    if mutation is None:
        return STANDARD_SIGNS
    if mutation not in MUTATIONS:
        raise ConfigError(f"job {job.name}: mutation must be one of {', '.join(MUTATIONS)}")
    return mutated_signs(mutation)


def merge_reports(name: str, reports: Sequence[IdentityReport], labels: Sequence[str]) -> IdentityReport:
    """Fold reports of the same identity over several operators into one."""
    samples = sum(r.samples for r in reports)
    failing = [(label, r) for label, r in zip(labels, reports) if r.status == CheckStatus.FAIL]
    details: Dict[str, Any] = {"operators": len(reports), "failures": sum(r.details.get("failures", 0) for r in reports)}
    counterexample: Optional[Counterexample] = None
    if failing:
        details["failing_operator"] = failing[0][0]
        counterexample = failing[0][1].counterexample
    return IdentityReport(
        name=name,
        samples=samples,
        status=CheckStatus.FAIL if failing else CheckStatus.PASS,
        counterexample=counterexample,
        details=details,
    )


def selected_operators(job: JobSpec, ws: Workspace) -> List[str]:
    """Operators a suite iterates over: params.check, else the job's own, else all."""
    names = job.param("check") or list(job.operators) or sorted(ws.operators)
    for name in names:
        ws.operator(name)
    return list(names)


def random_operators(job: JobSpec, ws: Workspace, label: str, degree: int, kill_unit: bool = False):
    count = job.param("random_operators", 0)
    return [
        random_operator(ws.alg, degree, derive_seed(job.seed, label, i), kill_unit=kill_unit)
        for i in range(count)
    ]


def gbva_instance(job: JobSpec, ws: Workspace, signs: PhiSigns = STANDARD_SIGNS) -> GbvaInstance:
    headroom = job.param("headroom", 0 if ws.kind == "bc" else 1)
    limit = job.param("limit", 1500 if ws.kind == "bc" else DEFAULT_TUPLE_LIMIT)
    return make_gbva_instance(ws.alg, ws.operator("delta"), headroom, limit, job.seed, signs)


def _required(job: JobSpec, key: str) -> Any:
    if key not in job.params:
        raise ConfigError(f"job {job.name}: params.{key} is required by suite {job.suite}")
    return job.params[key]


# -- order classification ------------------------------------------------------


@job_suite("check-order", description="differential order of each operator, with witnesses")
def run_check_order(job: JobSpec, ws: Workspace, inputs: Inputs) -> List[Any]:
    reports = []
    for name in selected_operators(job, ws):
        reports.append(classify_order(
            ws.alg,
            ws.operators[name],
            job.param("r_max", 3),
            unital_adjust=job.param("unital_adjust", True),
            headroom=job.param("headroom", 1),
            limit=job.param("limit", DEFAULT_TUPLE_LIMIT),
            seed=job.seed,
            expected=ws.orders.get(name),
        ))
    return reports


@job_suite(
    "phi-agreement",
    description="recursive, Koszul and explicit Phi-forms agree; nesting of partial Phi operators",
)
def run_phi_agreement(job: JobSpec, ws: Workspace, inputs: Inputs) -> List[Any]:
    signs = phi_signs(job)
    names = list(job.operators)
    ops = [ws.operators[n] for n in names]
    randoms = random_operators(job, ws, "phi-agreement", job.param("degree", 1), kill_unit=True)
    ops += randoms
    labels = names + [op.label for op in randoms]
    r_max, samples = job.param("r_max", 5), job.param("samples", 40)
    agreement, explicit, nesting = [], [], []
    for i, op in enumerate(ops):
        seed = derive_seed(job.seed, "op", i)
        agreement.append(check_phi_agreement(ws.alg, op, r_max, samples, seed, signs=signs))
        explicit.append(check_phi4_explicit(ws.alg, op, samples, seed))
        nesting.append(check_nesting(ws.alg, op, max(samples // 2, 1), seed))
    return [
        merge_reports("phi-recursive=koszul", agreement, labels),
        merge_reports("phi4-explicit", explicit, labels),
        merge_reports("phi-nesting", nesting, labels),
    ]


def _prepare_order_laws(job: JobSpec, ws: Workspace) -> Inputs:
    ops = []
    for name in selected_operators(job, ws):
        if name not in ws.orders:
            raise ConfigError(f"job {job.name}: operator {name!r} needs a claimed order")
        ops.append((ws.operators[name], ws.orders[name]))
    return {"ops": ops}


@job_suite("order-laws", prepare=_prepare_order_laws, description="composition and commutator order laws")
def run_order_laws(job: JobSpec, ws: Workspace, inputs: Inputs) -> List[Any]:
    return [check_order_laws(
        ws.alg,
        inputs["ops"],
        headroom=job.param("headroom", 2),
        limit=job.param("limit", DEFAULT_TUPLE_LIMIT),
        seed=job.seed,
    )]


# -- generated brackets ----------------------------------------------------------


@job_suite(
    "verify-gbva",
    kinds=("classical-bv", "multivector", "lie", "bc", "euler-dbva", "polynomial"),
    description="generalized BV identities, and the D-derivation rule when D is given",
)
def run_verify_gbva(job: JobSpec, ws: Workspace, inputs: Inputs) -> List[Any]:
    inst = gbva_instance(job, ws, phi_signs(job))
    flag = inst.flags.failed()
    if flag:
        return [refused(f"gbva-axioms[{inst.delta.label}]", f"{inst.delta.label} on {ws.alg.name} fails {flag}", flag)]
    samples = job.param("samples", 200)
    reports: List[Any] = check_gbva_identities(inst, samples, job.seed)
    if "D" in ws.operators:
        reports.append(check_d_derivation(inst, ws.operators["D"], ws.operators.get("L"), samples, job.seed))
    return reports


def _prepare_general(job: JobSpec, ws: Workspace) -> Inputs:
    if not job.operators and not job.param("random_operators", 0):
        raise ConfigError(f"job {job.name}: verify-general needs operators or params.random_operators")
    phi_signs(job)
    return {}


@job_suite(
    "verify-general",
    kinds=("structure", "random-structure", "polynomial", "classical-bv"),
    prepare=_prepare_general,
    description="bracket identities with correction terms for arbitrary odd operators",
)
def run_verify_general(job: JobSpec, ws: Workspace, inputs: Inputs) -> List[Any]:
    signs = phi_signs(job)
    names = list(job.operators)
    ops = [ws.operators[n] for n in names]
    randoms = random_operators(job, ws, "general", job.param("degree", 1))
    ops += randoms
    labels = names + [op.label for op in randoms]
    by_identity: Dict[str, List[IdentityReport]] = {}
    for i, op in enumerate(ops):
        for report in check_general_identities(ws.alg, op, job.param("samples", 20), derive_seed(job.seed, i), signs):
            by_identity.setdefault(report.name, []).append(report)
    return [merge_reports(name, reports, labels) for name, reports in by_identity.items()]


@job_suite(
    "mutation-sweep",
    kinds=("polynomial",),
    description="each single flipped recursion or bracket sign is caught by agreement or general identities",
)
def run_mutation_sweep(job: JobSpec, ws: Workspace, inputs: Inputs) -> List[Any]:
    count = job.param("random_operators", 3)
    samples, r_max = job.param("samples", 20), job.param("r_max", 3)
    structure = random_structure_algebra(job.param("structure_seed", 7))
    agreement_ops = [
        random_operator(ws.alg, 1, derive_seed(job.seed, "sweep-phi", i), kill_unit=True) for i in range(count)
    ]
    general_ops = [random_operator(structure, 1, derive_seed(job.seed, "sweep-general", i)) for i in range(count)]
    rows = []
    for mutation in MUTATIONS:
        signs = mutated_signs(mutation)
        caught: List[str] = []
        for i, op in enumerate(agreement_ops):
            report = check_phi_agreement(ws.alg, op, r_max, samples, derive_seed(job.seed, i), signs=signs)
            if not report.passed:
                caught.append("phi-recursive=koszul")
                break
        for i, op in enumerate(general_ops):
            reports = check_general_identities(structure, op, samples, derive_seed(job.seed, i), signs)
            failing = [r.name for r in reports if not r.passed]
            if failing:
                caught.extend(failing)
                break
        logger.debug(f"mutation {mutation}: caught by {caught or 'nothing'}")
        rows.append({"mutation": mutation, "caught_by": caught})
    missed = [row["mutation"] for row in rows if not row["caught_by"]]
    return [TableReport(
        "mutation-sweep",
        CheckStatus.FAIL if missed else CheckStatus.PASS,
        rows,
        {"operators": count, "structure": structure.name},
        f"undetected mutations: {', '.join(missed)}" if missed else "",
    )]


@job_suite("dbva", description="differential GBVA axioms and the weight-zero cohomology statements")
def run_dbva(job: JobSpec, ws: Workspace, inputs: Inputs) -> List[Any]:
    inst = gbva_instance(job, ws)
    D, L = ws.operator("D"), ws.operator("L")
    max_weight = job.param("max_weight")
    reports, table = verify_dbva(inst, D, L, parse_scalar(max_weight) if max_weight is not None else None)
    reports.append(table)
    reports.append(check_d_derivation(inst, D, L, job.param("samples", 100), job.seed))
    return reports


# -- Lie complexes ---------------------------------------------------------------


@job_suite("lie-homology", kinds=("lie",), description="Chevalley-Eilenberg complexes, homology and operator identities")
def run_lie_homology(job: JobSpec, ws: Workspace, inputs: Inputs) -> List[Any]:
    lie = ws.lie
    leibniz = lie_leibniz_check(lie, job.param("samples", 200), job.seed)
    if not leibniz.passed:
        return [leibniz]
    reports: List[Any] = [leibniz]
    expected = job.param("expected", {})
    for case in ComplexCase:
        spec = build_complex(lie, case)
        table = homology(complex_operator(spec), spec.alg.basis(), name=f"homology[{lie.name},{case.value}]")
        dims = [d for _, d in sorted(homology_dimensions(table).items())]
        table.details["dimensions"] = dims
        if case.value in expected:
            table.details["expected"] = expected[case.value]
            if dims != expected[case.value]:
                table.status = CheckStatus.FAIL
                table.message = f"homology dimensions {dims} differ from {expected[case.value]}"
        reports.append(table)
        reports.append(cartan_identity_check(lie, spec))
        reports.append(check_boundary_order(lie, spec, seed=job.seed))
        reports.extend(iota_epsilon_bv_check(lie, spec))
        if case == ComplexCase.HOMOLOGY:
            reports.append(check_rho_derivation(lie, spec))
            reports.append(check_bracket_sign(lie, spec))
    weil_cap = job.param("weil_cap")
    if weil_cap is not None:
        reports.append(weil_prime_homology(lie, weil_cap, seed=job.seed))
    return reports


# -- multivector fields ------------------------------------------------------------


@job_suite("sn-check", kinds=("multivector",), description="Schouten-Nijenhuis bracket generated by D_nabla")
def run_sn_check(job: JobSpec, ws: Workspace, inputs: Inputs) -> List[Any]:
    samples = job.param("samples", 200)
    reports: List[Any] = check_sn_generation(ws.n, ws.cap, samples, job.seed)
    reports.extend(check_gerstenhaber(ws.n, job.param("gerstenhaber_cap", 3), samples, job.seed))
    reports.append(check_vector_field_oracle(ws.n, ws.cap, max(samples // 2, 1), job.seed))
    return reports


# -- bc system ---------------------------------------------------------------------


@job_suite("vosa-verify", kinds=("bc",), description="mode orders, mode expansions and bc system identities")
def run_vosa_verify(job: JobSpec, ws: Workspace, inputs: Inputs) -> List[Any]:
    alg, cap, seed = ws.alg, ws.cap, job.seed
    limit, samples = job.param("limit", DEFAULT_LIMIT), job.param("samples", 200)
    b, c = alg.field_state("b"), alg.field_state("c")
    reports: List[Any] = []
    for n in list(job.param("modes", [0, 1, 2])) + list(job.param("left_modes", [-1, -2])):
        reports.append(check_mode_order(alg, b, n, cap, limit, seed))
    for r in job.param("expansion", [1, 2]):
        reports.append(check_phi2_expansion(alg, b, r, samples, cap, seed))
    if job.param("extras", True):
        reports.append(check_anticommutators(alg, range(-3, 4), cap))
        reports.append(check_primary_field(alg, b, 2, range(-2, 3), cap))
        reports.append(check_primary_field(alg, c, -1, range(-2, 3), cap))
        for n in (-2, -1, 0, 1):
            reports.append(check_l0_derivation(alg, n, samples, cap, seed))
        reports.append(check_residue_derivation(alg, b, samples=samples, weight_cap=cap, seed=seed))
        reports.append(check_residue_derivation(alg, c, samples=samples, weight_cap=cap, seed=seed))
        reports.append(check_g0_square_identity(alg, weight_cap=cap))
        reports.append(check_mode_order_laws(
            alg, b, tuple(job.param("law_modes", [0, 1])), job.param("law_limit", 150), seed
        ))
    return reports


def _prepare_weights(job: JobSpec, ws: Workspace) -> Inputs:
    states = []
    for entry in _required(job, "states"):
        if not isinstance(entry, dict) or "W" not in entry:
            raise ConfigError(f"job {job.name}: each state needs a W expression")
        states.append((parse_element(ws.alg, entry["W"]), parse_scalar(entry.get("lambda", 1))))
    return {"states": states}


@job_suite("weight-obstruction", kinds=("bc",), prepare=_prepare_weights, description="weight bookkeeping of the master equation")
def run_weight_obstruction(job: JobSpec, ws: Workspace, inputs: Inputs) -> List[Any]:
    inst = gbva_instance(job, ws)
    return [check_weight_obstruction(inst, W, lam) for W, lam in inputs["states"]]


# -- master equation ---------------------------------------------------------------


def _prepare_master(job: JobSpec, ws: Workspace) -> Inputs:
    return {
        "W": parse_element(ws.alg, _required(job, "W")),
        "lambda": parse_scalar(_required(job, "lambda")),
    }


@job_suite("master-check", kinds=CLASSICAL_KINDS, prepare=_prepare_master, description="master equation, power lemmas, exponential and deformation")
def run_master_check(job: JobSpec, ws: Workspace, inputs: Inputs) -> List[Any]:
    inst = gbva_instance(job, ws)
    W, lam = inputs["W"], inputs["lambda"]
    cand = MasterCandidate(W, lam, inst)
    reports: List[Any] = check_power_lemmas(cand, job.param("k_max", 5))
    reports.append(exp_check(cand, parse_scalar(job.param("exp_scale", 1))))
    if job.param("deform", True) and lam != 0 and cand.holds():
        # -2W/lambda solves Delta(a) + {a, a}/2 = 0 whenever W solves the master equation
        a = W.scale(-2 / lam)
        reports.extend(check_deformation(
            inst, a, samples=job.param("deform_samples", 30), limit=job.param("deform_limit", 300), seed=job.seed
        ))
    return reports


def _prepare_expansion(job: JobSpec, ws: Workspace) -> Inputs:
    return {"W": parse_element(ws.alg, _required(job, "W"))}


@job_suite("phi-expansion", kinds=CLASSICAL_KINDS, prepare=_prepare_expansion, description="Delta(W^k) through the Phi-forms of W")
def run_phi_expansion(job: JobSpec, ws: Workspace, inputs: Inputs) -> List[Any]:
    ops = [ws.operator("delta")] + [ws.operators[n] for n in job.operators]
    ops += random_operators(job, ws, "expansion", job.param("degree", -1))
    return [
        phi_expansion_check(
            ws.alg, op, inputs["W"], job.param("k_max", 4), job.param("order_limit", 400), derive_seed(job.seed, i)
        )
        for i, op in enumerate(ops)
    ]


def _prepare_deformation(job: JobSpec, ws: Workspace) -> Inputs:
    return {"a": parse_element(ws.alg, _required(job, "a"))}


@job_suite("deformation", kinds=CLASSICAL_KINDS, prepare=_prepare_deformation, description="Delta + {a, -} for solutions a of the deformation equation")
def run_deformation(job: JobSpec, ws: Workspace, inputs: Inputs) -> List[Any]:
    inst = gbva_instance(job, ws)
    return check_deformation(
        inst,
        inputs["a"],
        D=ws.operators.get("D"),
        L=ws.operators.get("L"),
        samples=job.param("samples", 40),
        limit=job.param("limit", 500),
        seed=job.seed,
    )


def _prepare_search(job: JobSpec, ws: Workspace) -> Inputs:
    bounds = job.param("coeffs", [-2, 2])
    if not (isinstance(bounds, list) and len(bounds) == 2 and all(isinstance(b, int) for b in bounds)):
        raise ConfigError(f"job {job.name}: params.coeffs must be [low, high]")
    return {"words": parse_elements(ws.alg, _required(job, "words")), "coeffs": range(bounds[0], bounds[1] + 1)}


@job_suite("master-search", kinds=CLASSICAL_KINDS, prepare=_prepare_search, description="bounded search for master equation solutions")
def run_master_search(job: JobSpec, ws: Workspace, inputs: Inputs) -> List[Any]:
    inst = gbva_instance(job, ws)
    found = search_master_solutions(inst, inputs["words"], inputs["coeffs"])
    minimum = job.param("min_solutions", 1)
    rows = [{"W": W.serialize(), "lambda": format_scalar(lam)} for W, lam in found]
    coeffs = inputs["coeffs"]
    table = TableReport(
        f"master-search[{ws.alg.name}]",
        CheckStatus.PASS if len(found) >= minimum else CheckStatus.FAIL,
        rows,
        {"solutions": len(found), "min_solutions": minimum, "coeffs": [coeffs.start, coeffs.stop - 1]},
    )
    reports: List[Any] = [table]
    nonzero = [(W, lam) for W, lam in found if lam != 0]
    for W, lam in nonzero[: job.param("verify", 2)]:
        reports.extend(check_power_lemmas(MasterCandidate(W, lam, inst), job.param("k_max", 5)))
    return reports


def _prepare_tower(job: JobSpec, ws: Workspace) -> Inputs:
    return {
        "S": parse_element(ws.alg, _required(job, "S")),
        "Ms": parse_elements(ws.alg, job.param("Ms", [])),
        "lambda": parse_scalar(_required(job, "lambda")),
    }


@job_suite("master-tower", kinds=CLASSICAL_KINDS, prepare=_prepare_tower, description="classical master equation and the order-by-order tower")
def run_master_tower(job: JobSpec, ws: Workspace, inputs: Inputs) -> List[Any]:
    inst = gbva_instance(job, ws)
    reports: List[Any] = [classical_master(inst, inputs["S"])]
    reports.extend(check_master_tower(inst, inputs["S"], inputs["Ms"], inputs["lambda"]))
    return reports
