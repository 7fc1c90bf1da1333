from enum import Enum


class CheckStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    REFUSED = "refused"
    SKIPPED = "skipped"


class ComplexCase(Enum):
    COHOMOLOGY = "cohomology"
    HOMOLOGY = "homology"


class ModuleKind(Enum):
    TRIVIAL = "trivial"
    SYMMETRIC = "symmetric"


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"
