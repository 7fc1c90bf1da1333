"""Structured results of identity checks."""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from .elements import Element
from .enums import CheckStatus


@dataclass
class Counterexample:
    """First failing input of an identity check."""

    inputs: List[List[str]]
    lhs: List[str]
    rhs: List[str]
    residual: List[str]

    @classmethod
    def build(cls, inputs: Sequence[Element], lhs: Element, rhs: Element) -> "Counterexample":
        return cls(
            inputs=[x.serialize() for x in inputs],
            lhs=lhs.serialize(),
            rhs=rhs.serialize(),
            residual=(lhs - rhs).serialize(),
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {"inputs": self.inputs, "lhs": self.lhs, "rhs": self.rhs, "residual": self.residual}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Counterexample":
        """Create from dictionary."""
        return cls(inputs=data["inputs"], lhs=data["lhs"], rhs=data["rhs"], residual=data["residual"])


@dataclass
class IdentityReport:
    """Outcome of checking one identity over a set of samples."""

    name: str
    samples: int
    status: CheckStatus
    counterexample: Optional[Counterexample] = None
    details: Dict[str, Any] = field(default_factory=dict)
    message: str = ""
    asserted: bool = True

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS or not self.asserted

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "kind": "identity",
            "name": self.name,
            "samples": self.samples,
            "status": self.status.value,
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
            "details": self.details,
            "message": self.message,
            "asserted": self.asserted,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "IdentityReport":
        """Create from dictionary."""
        counterexample = data.get("counterexample")
        return cls(
            name=data["name"],
            samples=data["samples"],
            status=CheckStatus(data["status"]),
            counterexample=Counterexample.from_dict(counterexample) if counterexample else None,
            details=data.get("details", {}),
            message=data.get("message", ""),
            asserted=data.get("asserted", True),
        )


@dataclass
class Witness:
    inputs: List[List[str]]
    value: List[str]

    def to_dict(self) -> Dict[str, Any]:
        return {"inputs": self.inputs, "value": self.value}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Witness":
        return cls(inputs=data["inputs"], value=data["value"])


@dataclass
class OrderReport:
    """Observed differential order of an operator on a finite domain.

    ``order`` is None when the operator did not vanish up to ``r_max + 1``
    arguments. ``witnesses`` maps each arity k with a nonvanishing Phi^k to
    an input tuple.
    """

    operator: str
    r_max: int
    order: Optional[int]
    witnesses: Dict[int, Witness]
    domain_size: int
    exhaustive: bool
    status: CheckStatus = CheckStatus.PASS
    expected: Optional[int] = None
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS

    @property
    def name(self) -> str:
        return f"order({self.operator})"

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "kind": "order",
            "name": self.name,
            "operator": self.operator,
            "r_max": self.r_max,
            "order": self.order,
            "expected": self.expected,
            "witnesses": {str(k): w.to_dict() for k, w in sorted(self.witnesses.items())},
            "domain_size": self.domain_size,
            "exhaustive": self.exhaustive,
            "status": self.status.value,
            "details": self.details,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "OrderReport":
        """Create from dictionary."""
        return cls(
            operator=data["operator"],
            r_max=data["r_max"],
            order=data["order"],
            witnesses={int(k): Witness.from_dict(w) for k, w in data["witnesses"].items()},
            domain_size=data["domain_size"],
            exhaustive=data["exhaustive"],
            status=CheckStatus(data["status"]),
            expected=data.get("expected"),
            details=data.get("details", {}),
        )


@dataclass
class TableReport:
    """Tabular result such as homology dimensions or order-law checks."""

    name: str
    status: CheckStatus
    rows: List[Dict[str, Any]] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)
    message: str = ""

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "kind": "table",
            "name": self.name,
            "status": self.status.value,
            "rows": self.rows,
            "details": self.details,
            "message": self.message,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TableReport":
        """Create from dictionary."""
        return cls(
            name=data["name"],
            status=CheckStatus(data["status"]),
            rows=data.get("rows", []),
            details=data.get("details", {}),
            message=data.get("message", ""),
        )


def report_from_dict(data: Dict[str, Any]):
    kinds = {"identity": IdentityReport, "order": OrderReport, "table": TableReport}
    return kinds[data["kind"]].from_dict(data)


class ResidualCollector:
    """Accumulates lhs/rhs comparisons and keeps the first counterexample."""

    def __init__(self, name: str):
        self.name = name
        self.samples = 0
        self.counterexample: Optional[Counterexample] = None
        self.failures = 0

    def record(self, inputs: Sequence[Element], lhs: Element, rhs: Element) -> bool:
        self.samples += 1
        if lhs == rhs:
            return True
        self.failures += 1
        if self.counterexample is None:
            self.counterexample = Counterexample.build(inputs, lhs, rhs)
        return False

    def report(self, details: Optional[Dict[str, Any]] = None, asserted: bool = True) -> IdentityReport:
        status = CheckStatus.FAIL if self.counterexample else CheckStatus.PASS
        merged = dict(details or {})
        merged["failures"] = self.failures
        return IdentityReport(
            name=self.name,
            samples=self.samples,
            status=status,
            counterexample=self.counterexample,
            details=merged,
            asserted=asserted,
        )


def refused(name: str, message: str, flag: Optional[str] = None) -> IdentityReport:
    return IdentityReport(
        name=name,
        samples=0,
        status=CheckStatus.REFUSED,
        details={"flag": flag} if flag else {},
        message=message,
    )
