"""Text and JSON renderings of a run report."""
import json
import logging
import os
import sys
from functools import lru_cache
from typing import Any, Dict, List, Optional, Union

import jsonschema

from base.enums import CheckStatus, OutputFormat
from base.errors import ConfigError

from .runner import RunReport

logger = logging.getLogger(__name__)

SCHEMA_PATH = os.path.join(os.path.dirname(__file__), "report.schema.json")


@lru_cache(maxsize=1)
def load_schema() -> Dict[str, Any]:
    with open(SCHEMA_PATH, "r", encoding="utf-8") as f:
        return json.load(f)


def report_data(report: RunReport) -> Dict[str, Any]:
    """The report as plain JSON data (scalars in details become strings)."""
    return json.loads(json.dumps(report.to_dict(), default=str))


def validate_report_data(data: Dict[str, Any]) -> None:
    """Raises jsonschema.ValidationError if the data does not match the bundled schema."""
    jsonschema.validate(data, load_schema())


def render_json(report: RunReport) -> str:
    data = report_data(report)
    validate_report_data(data)
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _terms(terms: List[str]) -> str:
    return " + ".join(terms) if terms else "0"


def _report_lines(data: Dict[str, Any]) -> List[str]:
    status = data["status"]
    tag = status.upper() if status != CheckStatus.PASS.value else "pass"
    kind = data["kind"]
    if kind == "identity":
        failures = data["details"].get("failures", 0)
        line = f"  {tag:<8}{data['name']} ({data['samples']} samples"
        line += f", {failures} failures)" if failures else ")"
        if not data["asserted"]:
            line += " [reported only]"
        if data.get("message"):
            line += f": {data['message']}"
        lines = [line]
        example = data["counterexample"]
        if example is not None:
            # one marker per failed asserted identity; unasserted residuals stay unmarked
            marker = "COUNTEREXAMPLE" if data["asserted"] else "residual"
            lines.append(f"    {marker} {data['name']}")
            lines.append("      inputs: " + " | ".join(_terms(x) for x in example["inputs"]))
            lines.append(f"      lhs: {_terms(example['lhs'])}")
            lines.append(f"      rhs: {_terms(example['rhs'])}")
            lines.append(f"      residual: {_terms(example['residual'])}")
        return lines
    if kind == "order":
        order = str(data["order"]) if data["order"] is not None else f"> {data['r_max']}"
        line = f"  {tag:<8}{data['name']} = {order}"
        if data.get("expected") is not None:
            line += f" (expected {data['expected']})"
        line += f" on {data['domain_size']} words" + ("" if data["exhaustive"] else ", sampled")
        lines = [line]
        for arity, witness in sorted(data["witnesses"].items(), key=lambda kv: int(kv[0])):
            args = ", ".join(_terms(x) for x in witness["inputs"])
            lines.append(f"    witness Phi^{arity}({args}) = {_terms(witness['value'])}")
        return lines
    line = f"  {tag:<8}{data['name']} ({len(data['rows'])} rows)"
    if data.get("message"):
        line += f": {data['message']}"
    lines = [line]
    for row in data["rows"]:
        lines.append("    " + ", ".join(f"{k}={row[k]}" for k in sorted(row)))
    return lines


def render_text(report: RunReport) -> str:
    """Stable, diff-friendly text; wall times are left out so reruns compare equal."""
    data = report_data(report)
    summary = data["summary"]
    lines = [
        f"run {data['source']}: {data['status'].upper()} "
        f"({summary['pass']}/{summary['jobs']} jobs passed)"
    ]
    for job in data["jobs"]:
        header = f"job {job['name']} [{job['suite']}]: {job['status'].upper()}"
        if job.get("flag"):
            header += f" (flag {job['flag']})"
        if job["error"]:
            header += f": {job['error']}"
        lines.append(header)
        for entry in job["reports"]:
            lines.extend(_report_lines(entry))
    return "\n".join(lines) + "\n"


def emit_report(
    report: RunReport,
    fmt: Union[OutputFormat, str] = OutputFormat.TEXT,
    out: Optional[str] = None,
) -> str:
    """Render the report and write it to ``out`` (or stdout).

    Raises:
        ConfigError: If the output path cannot be written
    """
    fmt = OutputFormat(fmt)
    text = render_json(report) if fmt == OutputFormat.JSON else render_text(report)
    if out is None:
        sys.stdout.write(text)
        return text
    try:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
    except OSError as e:
        raise ConfigError(f"cannot write report to {out}: {e.strerror}") from e
    logger.info(f"report written to {out}")
    return text
