"""Resolution of the algebra and operator sections of a job."""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Tuple

from base.algebra import Superalgebra
from base.enums import ComplexCase, ModuleKind
from base.errors import ConfigError, KernelError
from base.operators import LinOp, euler_operator, zero_operator
from base.polynomial import PolynomialSuperalgebra
from base.random_gen import random_operator
from base.structure import StructureConstantAlgebra, random_structure_algebra
from bv.classical import classical_bv_algebra
from bv.dbva import euler_dbva_example
from lie.complexes import ComplexSpec, build_complex, complex_operator
from lie.data import BUILTIN_LIE_ALGEBRAS, LieAlgebraData, builtin_lie_algebra
from schouten.multivector import d_nabla, multivector_algebra
from vosa.fock import BcVertexAlgebra
from vosa.modes import bv_operator, l0_operator, mode_operator, virasoro_operator, weight_mode_operator

from .config import JobSpec
from .expressions import parse_element, parse_operator

logger = logging.getLogger(__name__)

DEFAULT_CAPS = {
    "polynomial": 8,
    "classical-bv": 4,
    "multivector": 2,
    "bc": 2,
    "lie": 2,
    "euler-dbva": 6,
}


@dataclass
class Workspace:
    """The objects a job runs on."""

    kind: str
    alg: Superalgebra
    cap: Optional[int] = None
    operators: Dict[str, LinOp] = field(default_factory=dict)
    orders: Dict[str, int] = field(default_factory=dict)
    lie: Optional[LieAlgebraData] = None
    complex: Optional[ComplexSpec] = None
    n: Optional[int] = None

    def operator(self, name: str) -> LinOp:
        if name not in self.operators:
            raise ConfigError(f"operator {name!r} is not defined for {self.alg.name}")
        return self.operators[name]

    def element(self, text: str):
        return parse_element(self.alg, text)


def _int(spec: Dict[str, Any], key: str, default: Optional[int] = None, minimum: int = 0) -> int:
    value = spec.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise ConfigError(f"algebra field {key!r} must be an integer >= {minimum}")
    return value


def _polynomial(spec: Dict[str, Any], cap: int) -> Workspace:
    alg = PolynomialSuperalgebra(
        _int(spec, "even", 1),
        _int(spec, "odd", 0),
        cap,
        spec.get("even_names"),
        spec.get("odd_names"),
        name=spec.get("name"),
    )
    return Workspace("polynomial", alg, cap, {"E": euler_operator(alg)})


def _classical(spec: Dict[str, Any], cap: int) -> Workspace:
    n = _int(spec, "n", 2, minimum=1)
    alg, delta = classical_bv_algebra(n, cap)
    return Workspace("classical-bv", alg, cap, {"delta": delta, "E": euler_operator(alg)}, n=n)


def _multivector(spec: Dict[str, Any], cap: int) -> Workspace:
    n = _int(spec, "n", 2, minimum=1)
    alg = multivector_algebra(n, cap)
    return Workspace("multivector", alg, cap, {"delta": d_nabla(alg)}, n=n)


def _structure(spec: Dict[str, Any], cap: int) -> Workspace:
    degrees = spec.get("degrees")
    if not isinstance(degrees, list) or not degrees:
        raise ConfigError("a structure algebra needs a non-empty degrees list")
    table: Dict[Tuple[int, int], Dict[int, Any]] = {}
    for entry in spec.get("table", []):
        if not isinstance(entry, list) or len(entry) != 4:
            raise ConfigError(f"structure table entry {entry!r} must be [i, j, k, coefficient]")
        i, j, k, c = entry
        table.setdefault((int(i), int(j)), {})[int(k)] = c
    alg = StructureConstantAlgebra(
        degrees,
        table,
        unit_index=spec.get("unit"),
        names=spec.get("names"),
        name=spec.get("name", "structure-algebra"),
    )
    return Workspace("structure", alg)


def _random_structure(spec: Dict[str, Any], cap: int) -> Workspace:
    seed = _int(spec, "seed", 0)
    degrees = spec.get("degrees", [0, 0, 1, 1, 2, 3])
    return Workspace("random-structure", random_structure_algebra(seed, degrees))


def lie_from_spec(value: Any) -> LieAlgebraData:
    """A builtin Lie algebra name, or {"names", "triples", ...}."""
    if isinstance(value, str):
        lie = builtin_lie_algebra(value)
        if lie is None:
            known = ", ".join(sorted(BUILTIN_LIE_ALGEBRAS))
            raise ConfigError(f"unknown Lie algebra {value!r} (known: {known})")
        return lie
    if not isinstance(value, dict) or "names" not in value:
        raise ConfigError("Lie data must be a builtin name or an object with names and triples")
    return LieAlgebraData.from_triples(
        value["names"],
        value.get("triples", []),
        semisimple=bool(value.get("semisimple", False)),
        name=value.get("name", "lie"),
        validate=bool(value.get("validate", True)),
    )


def _lie(spec: Dict[str, Any], cap: int) -> Workspace:
    lie = lie_from_spec(spec.get("lie", "sl2"))
    case = ComplexCase(spec.get("case", ComplexCase.HOMOLOGY.value))
    module = ModuleKind(spec.get("module", ModuleKind.TRIVIAL.value))
    degree_cap = cap if module == ModuleKind.SYMMETRIC else None
    complex_spec = build_complex(lie, case, module, degree_cap)
    operators = {"delta": complex_operator(complex_spec)}
    return Workspace("lie", complex_spec.alg, cap, operators, lie=lie, complex=complex_spec)


def _bc(spec: Dict[str, Any], cap: int) -> Workspace:
    alg = BcVertexAlgebra(cap)
    return Workspace("bc", alg, cap, {"delta": bv_operator(alg), "L0": l0_operator(alg)})


def _euler_dbva(spec: Dict[str, Any], cap: int) -> Workspace:
    inst, D, L = euler_dbva_example(cap)
    return Workspace("euler-dbva", inst.alg, cap, {"delta": inst.delta, "D": D, "L": L})


ALGEBRA_BUILDERS: Dict[str, Callable[[Dict[str, Any], int], Workspace]] = {
    "polynomial": _polynomial,
    "classical-bv": _classical,
    "multivector": _multivector,
    "structure": _structure,
    "random-structure": _random_structure,
    "lie": _lie,
    "bc": _bc,
    "euler-dbva": _euler_dbva,
}


def _bc_only(ws: Workspace, kind: str) -> BcVertexAlgebra:
    if not isinstance(ws.alg, BcVertexAlgebra):
        raise ConfigError(f"operator kind {kind!r} needs the bc algebra")
    return ws.alg


def build_operator(ws: Workspace, name: str, spec: Any) -> Tuple[LinOp, Optional[int]]:
    """One operator from an expression string or a {"kind": ...} object.

    Returns:
        Tuple: The operator and its declared order, if any
    """
    if isinstance(spec, str):
        return parse_operator(ws.alg, spec, ws.operators), None
    if not isinstance(spec, dict):
        raise ConfigError(f"operator {name!r} must be an expression or an object")
    kind = spec.get("kind", "expression")
    order = spec.get("order")
    if order is not None and (isinstance(order, bool) or not isinstance(order, int) or order < 0):
        raise ConfigError(f"operator {name!r}: order must be a non-negative integer")
    if kind == "expression":
        op = parse_operator(ws.alg, spec.get("expr", ""), ws.operators)
    elif kind == "random":
        op = random_operator(
            ws.alg,
            int(spec.get("degree", 1)),
            int(spec.get("seed", 0)),
            kill_unit=bool(spec.get("kill_unit", False)),
            max_terms=int(spec.get("max_terms", 3)),
        )
    elif kind == "zero":
        op = zero_operator(int(spec.get("degree", 0)), name)
    elif kind == "mode":
        alg = _bc_only(ws, kind)
        op = mode_operator(alg, parse_element(alg, spec.get("state", "b")), int(spec.get("n", 0)))
    elif kind == "weight-mode":
        alg = _bc_only(ws, kind)
        op = weight_mode_operator(alg, parse_element(alg, spec.get("state", "b")), int(spec.get("k", 0)))
    elif kind == "virasoro":
        op = virasoro_operator(_bc_only(ws, kind), int(spec.get("m", 0)))
    else:
        raise ConfigError(f"operator {name!r}: unknown kind {kind!r}")
    return op, order


def build_workspace(job: JobSpec) -> Workspace:
    """Build the algebra and operators of a job.

    Raises:
        ConfigError: For unknown kinds, malformed data or bad expressions
    """
    spec = job.algebra
    kind = spec.get("kind")
    builder = ALGEBRA_BUILDERS.get(kind)
    if builder is None:
        known = ", ".join(sorted(ALGEBRA_BUILDERS))
        raise ConfigError(f"job {job.name}: unknown algebra kind {kind!r} (known: {known})")
    cap = job.param("cap", DEFAULT_CAPS.get(kind))
    try:
        ws = builder(spec, cap)
        for name, op_spec in job.operators.items():
            op, order = build_operator(ws, name, op_spec)
            op.label = name if not isinstance(op_spec, str) else op.label
            ws.operators[name] = op
            if order is not None:
                ws.orders[name] = order
    except ConfigError as e:
        e.message = f"job {job.name}: {e.message}"
        e.args = (e.message,)
        raise
    except (KernelError, ValueError, TypeError) as e:
        message = e.message if isinstance(e, KernelError) else str(e)
        raise ConfigError(f"job {job.name}: {message}") from e
    logger.debug(f"job {job.name}: {ws.alg.name} with operators {sorted(ws.operators)}")
    return ws
