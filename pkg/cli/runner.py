"""Parallel execution of suite jobs."""
import logging
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from base.enums import CheckStatus
from base.errors import PreconditionError
from base.reports import report_from_dict

from .builders import Workspace, build_workspace
from .config import JobSpec, SuiteSpec, load_suite
from .jobs import Inputs, SuiteEntry, get_suite

SCHEMA_VERSION = 1

Prepared = Tuple[JobSpec, SuiteEntry, Workspace, Inputs]


@dataclass
class JobResult:
    """Outcome of one job."""

    name: str
    suite: str
    status: CheckStatus
    job: Dict[str, Any]
    reports: List[Any] = field(default_factory=list)
    wall_time: float = 0.0
    error: Optional[str] = None
    flag: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "name": self.name,
            "suite": self.suite,
            "status": self.status.value,
            "passed": self.passed,
            "job": self.job,
            "reports": [r.to_dict() for r in self.reports],
            "wall_time": round(self.wall_time, 3),
            "error": self.error,
            "flag": self.flag,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "JobResult":
        """Create from dictionary."""
        return cls(
            name=data["name"],
            suite=data["suite"],
            status=CheckStatus(data["status"]),
            job=data["job"],
            reports=[report_from_dict(r) for r in data.get("reports", [])],
            wall_time=data.get("wall_time", 0.0),
            error=data.get("error"),
            flag=data.get("flag"),
        )


@dataclass
class RunReport:
    """All job results of a run, in suite order."""

    source: str
    jobs: List[JobResult]
    schema_version: int = SCHEMA_VERSION

    @property
    def passed(self) -> bool:
        return all(job.passed for job in self.jobs)

    def summary(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in CheckStatus}
        for job in self.jobs:
            counts[job.status.value] += 1
        counts["jobs"] = len(self.jobs)
        return counts

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "schema_version": self.schema_version,
            "source": self.source,
            "status": CheckStatus.PASS.value if self.passed else CheckStatus.FAIL.value,
            "passed": self.passed,
            "summary": self.summary(),
            "jobs": [job.to_dict() for job in self.jobs],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunReport":
        """Create from dictionary."""
        return cls(
            source=data["source"],
            jobs=[JobResult.from_dict(j) for j in data["jobs"]],
            schema_version=data.get("schema_version", SCHEMA_VERSION),
        )


class SuiteRunner:
    """Resolves every job of a suite, then runs them on a worker pool."""

    def __init__(self, max_workers: int = 1):
        """Initialize suite runner.

        Args:
            max_workers: Number of jobs run at the same time
        """
        self.max_workers = max(1, max_workers)
        self.logger = logging.getLogger(__name__)

    def prepare(self, suite: SuiteSpec) -> List[Prepared]:
        """Build algebras, operators and inputs of every job.

        Raises:
            ConfigError: On the first job that does not resolve
        """
        prepared = []
        for job in suite.jobs:
            entry = get_suite(job.suite)
            ws = build_workspace(job)
            prepared.append((job, entry, ws, entry.resolve(job, ws)))
        return prepared

    def run_job(self, item: Prepared) -> JobResult:
        """Run one prepared job; failures become results, never exceptions."""
        job, entry, ws, inputs = item
        result = JobResult(job.name, job.suite, CheckStatus.PASS, job.to_dict())
        start = time.perf_counter()
        try:
            result.reports = entry.run(job, ws, inputs)
            unmet = [r for r in result.reports if not r.passed]
            if any(r.status != CheckStatus.REFUSED for r in unmet):
                result.status = CheckStatus.FAIL
            elif unmet:
                result.status = CheckStatus.REFUSED
                result.flag = unmet[0].details.get("flag")
                result.error = unmet[0].message
        except PreconditionError as e:
            self.logger.warning(f"job {job.name} refused: {e.message}")
            result.status = CheckStatus.REFUSED
            result.error = e.message
            result.flag = e.flag
        except Exception as e:
            self.logger.exception(f"job {job.name} failed")
            result.status = CheckStatus.FAIL
            result.error = f"{type(e).__name__}: {e}"
        result.wall_time = time.perf_counter() - start
        self.logger.info(f"job {job.name} [{job.suite}]: {result.status.value} in {result.wall_time:.2f}s")
        return result

    def run(self, suite: SuiteSpec) -> RunReport:
        prepared = self.prepare(suite)
        results: List[Optional[JobResult]] = [None] * len(prepared)
        if self.max_workers == 1 or len(prepared) <= 1:
            for index, item in enumerate(prepared):
                results[index] = self.run_job(item)
        else:
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                futures = {executor.submit(self.run_job, item): index for index, item in enumerate(prepared)}
                for future in as_completed(futures):
                    results[futures[future]] = future.result()
        report = RunReport(suite.source, [r for r in results if r is not None])
        summary = report.summary()
        self.logger.info(
            f"{suite.source}: {summary['pass']}/{summary['jobs']} jobs passed"
            f" ({summary['fail']} failed, {summary['refused']} refused)"
        )
        return report


def run_suite(
    config_path: str,
    parallelism: int = 1,
    seed: Optional[int] = None,
    cap: Optional[int] = None,
) -> RunReport:
    """Load a suite file and run it.

    Args:
        config_path: Path to the suite JSON file
        parallelism: Number of jobs run at the same time
        seed: Global seed override
        cap: Global truncation cap override

    Returns:
        RunReport: Results in suite order

    Raises:
        ConfigError: If the suite does not parse or resolve
    """
    suite = load_suite(config_path).with_overrides(seed, cap)
    return SuiteRunner(parallelism).run(suite)
