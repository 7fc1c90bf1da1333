"""Suite files: a JSON list of verification jobs."""
import json
import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Union

from base.errors import ConfigError

logger = logging.getLogger(__name__)

SUITE_VERSION = 1

AlgebraSpec = Union[str, Dict[str, Any]]


def _is_cap(key: str) -> bool:
    return key == "cap" or key.endswith("_cap")


@dataclass
class JobSpec:
    """One job of a suite: a named check suite applied to an algebra."""

    name: str
    suite: str
    algebra: Dict[str, Any]
    operators: Dict[str, Any] = field(default_factory=dict)
    params: Dict[str, Any] = field(default_factory=dict)

    @property
    def seed(self) -> int:
        return self.params.get("seed", 0)

    def param(self, key: str, default: Any = None) -> Any:
        return self.params.get(key, default)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "name": self.name,
            "suite": self.suite,
            "algebra": self.algebra,
            "operators": self.operators,
            "params": self.params,
        }

    @classmethod
    def from_dict(
        cls,
        data: Dict[str, Any],
        defaults: Optional[Dict[str, Any]] = None,
        where: str = "job",
    ) -> "JobSpec":
        """Create from dictionary, filling params from the suite defaults.

        Args:
            data: Job as read from the suite file
            defaults: Suite-level params applied under the job's own
            where: Position of the job, used in error messages

        Raises:
            ConfigError: If a field is missing or has the wrong shape
        """
        if not isinstance(data, dict):
            raise ConfigError(f"{where} must be an object")
        suite = data.get("suite")
        if not isinstance(suite, str) or not suite:
            raise ConfigError(f"{where}.suite must be a non-empty string")
        algebra = data.get("algebra", {})
        if isinstance(algebra, str):
            algebra = {"kind": algebra}
        if not isinstance(algebra, dict):
            raise ConfigError(f"{where}.algebra must be a name or an object")
        operators = data.get("operators", {})
        if not isinstance(operators, dict):
            raise ConfigError(f"{where}.operators must be an object")
        params = dict(defaults or {})
        own = data.get("params", {})
        if not isinstance(own, dict):
            raise ConfigError(f"{where}.params must be an object")
        params.update(own)
        params.setdefault("seed", 0)
        job = cls(
            name=str(data.get("name", where)),
            suite=suite,
            algebra=algebra,
            operators=operators,
            params=params,
        )
        job.validate(where)
        return job

    def validate(self, where: str = "job") -> None:
        seed = self.params.get("seed")
        if isinstance(seed, bool) or not isinstance(seed, int):
            raise ConfigError(f"{where}.params.seed must be an integer")
        for key, value in self.params.items():
            if _is_cap(key) and (isinstance(value, bool) or not isinstance(value, int) or value <= 0):
                raise ConfigError(f"{where}.params.{key} must be a positive integer")


@dataclass
class SuiteSpec:
    """A parsed suite file."""

    jobs: List[JobSpec]
    version: int = SUITE_VERSION
    source: str = "<memory>"
    defaults: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "version": self.version,
            "defaults": self.defaults,
            "jobs": [job.to_dict() for job in self.jobs],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], source: str = "<memory>") -> "SuiteSpec":
        """Create from dictionary.

        Raises:
            ConfigError: On an unsupported version or malformed jobs
        """
        if not isinstance(data, dict):
            raise ConfigError(f"{source}: a suite must be a JSON object")
        version = data.get("version", SUITE_VERSION)
        if version != SUITE_VERSION:
            raise ConfigError(f"{source}: unsupported suite version {version!r}")
        defaults = data.get("defaults", {})
        if not isinstance(defaults, dict):
            raise ConfigError(f"{source}: defaults must be an object")
        raw_jobs = data.get("jobs", [])
        if not isinstance(raw_jobs, list):
            raise ConfigError(f"{source}: jobs must be a list")
        jobs = [
            JobSpec.from_dict(job, defaults, f"jobs[{index}]")
            for index, job in enumerate(raw_jobs)
        ]
        names = [job.name for job in jobs]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise ConfigError(f"{source}: duplicate job names {', '.join(duplicates)}")
        return cls(jobs=jobs, version=version, source=source, defaults=defaults)

    def with_overrides(self, seed: Optional[int] = None, cap: Optional[int] = None) -> "SuiteSpec":
        """Copy of the suite with a global seed and truncation cap applied."""
        if cap is not None and cap <= 0:
            raise ConfigError("--cap must be a positive integer")
        jobs = []
        for job in self.jobs:
            params = dict(job.params)
            if seed is not None:
                params["seed"] = seed
            if cap is not None:
                params["cap"] = cap
            jobs.append(replace(job, params=params))
        return replace(self, jobs=jobs)


def parse_suite(text: str, source: str = "<memory>") -> SuiteSpec:
    """Parse suite JSON text.

    Raises:
        ConfigError: With line and column for JSON syntax errors
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"{source}: {e.msg}", e.lineno, e.colno) from e
    suite = SuiteSpec.from_dict(data, source)
    if not suite.jobs:
        logger.warning(f"{source}: suite has no jobs; the run passes vacuously")
    return suite


def load_suite(path: str) -> SuiteSpec:
    """Read and parse a suite file."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise ConfigError(f"cannot read suite {path}: {e.strerror}") from e
    return parse_suite(text, path)
