"""Suite files, job execution and report emission for the bvcheck command."""
from .config import JobSpec, SuiteSpec, load_suite, parse_suite
from .emit import emit_report, render_json, render_text
from .runner import JobResult, RunReport, SuiteRunner, run_suite

__all__ = [
    'JobSpec',               # One job of a suite file
    'SuiteSpec',
    'load_suite',
    'parse_suite',
    'SuiteRunner',           # Resolves and runs jobs on a worker pool
    'run_suite',
    'JobResult',
    'RunReport',
    'render_text',
    'render_json',
    'emit_report',
]
