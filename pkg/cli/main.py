"""Command line entry point.

Every subcommand builds a suite (one job, or the jobs of suite files) and
runs it through the same runner, so all of them share the reporting flags.
Exit codes: 0 all jobs pass, 1 an identity failed or a check refused,
2 configuration error.
"""
import argparse
import logging
import os
import sys
from typing import Any, Callable, Dict, List, Optional

from base.enums import OutputFormat
from base.errors import ConfigError

from .config import JobSpec, SuiteSpec, load_suite
from .emit import emit_report
from .jobs import JOB_SUITES
from .runner import SuiteRunner

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2

LIE_CHOICES = ("sl2", "abelian2", "abelian3", "aff1")


def configure_logging(verbose: bool = False) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
        force=True,
    )


def single_job(name: str, suite: str, algebra: Dict[str, Any], operators=None, **params) -> SuiteSpec:
    data = {"name": name, "suite": suite, "algebra": algebra, "operators": operators or {}, "params": params}
    return SuiteSpec(jobs=[JobSpec.from_dict(data, where=name)], source=f"<{name}>")


def _split_order(text: str):
    """"EXPR=K" declares the expected order K."""
    expr, sep, order = text.rpartition("=")
    if not sep:
        return text, None
    try:
        return expr, int(order)
    except ValueError as e:
        raise ConfigError(f"bad expected order in {text!r}") from e


def _gbva_algebra(args: argparse.Namespace) -> Dict[str, Any]:
    if args.algebra in LIE_CHOICES:
        return {"kind": "lie", "lie": args.algebra}
    if args.algebra == "bc":
        return {"kind": "bc"}
    return {"kind": args.algebra, "n": args.n}


def build_check_order(args: argparse.Namespace) -> SuiteSpec:
    operators = {}
    for text in args.operator:
        expr, order = _split_order(text)
        spec: Dict[str, Any] = {"expr": expr}
        if order is not None:
            spec["order"] = order
        operators[expr.strip()] = spec
    return single_job(
        "check-order", "check-order",
        {"kind": "polynomial", "even": args.even, "odd": args.odd},
        operators,
        r_max=args.r_max,
    )


def build_verify_gbva(args: argparse.Namespace) -> SuiteSpec:
    operators = {"D": args.D} if args.D else {}
    if args.L:
        operators["L"] = args.L
    return single_job("verify-gbva", "verify-gbva", _gbva_algebra(args), operators, samples=args.samples)


def build_verify_general(args: argparse.Namespace) -> SuiteSpec:
    params: Dict[str, Any] = {"random_operators": args.operators, "samples": args.samples}
    if args.mutation:
        params["mutation"] = args.mutation
    return single_job(
        "verify-general", "verify-general",
        {"kind": "random-structure", "seed": args.structure_seed},
        **params,
    )


def build_lie_homology(args: argparse.Namespace) -> SuiteSpec:
    params: Dict[str, Any] = {}
    if args.weil_cap is not None:
        params["weil_cap"] = args.weil_cap
    return single_job("lie-homology", "lie-homology", {"kind": "lie", "lie": args.lie}, **params)


def build_sn_check(args: argparse.Namespace) -> SuiteSpec:
    return single_job("sn-check", "sn-check", {"kind": "multivector", "n": args.n}, samples=args.samples)


def build_vosa_verify(args: argparse.Namespace) -> SuiteSpec:
    return single_job(
        "vosa-verify", "vosa-verify", {"kind": "bc"},
        modes=args.modes,
        left_modes=args.left_modes,
        extras=not args.modes_only,
    )


def build_master_check(args: argparse.Namespace) -> SuiteSpec:
    return single_job(
        "master-check", "master-check",
        {"kind": "classical-bv", "n": args.n},
        W=args.W,
        **{"lambda": args.lam, "k_max": args.k_max},
    )


def build_run(args: argparse.Namespace) -> SuiteSpec:
    suites = [load_suite(path) for path in args.suites]
    if len(suites) == 1:
        return suites[0]
    jobs: List[JobSpec] = []
    for path, suite in zip(args.suites, suites):
        stem = os.path.splitext(os.path.basename(path))[0]
        for job in suite.jobs:
            job.name = f"{stem}/{job.name}"
            jobs.append(job)
    return SuiteSpec(jobs=jobs, source=", ".join(args.suites))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=1, help="jobs run at the same time")
    common.add_argument("--seed", type=int, default=None, help="global seed override")
    common.add_argument("--cap", type=int, default=None, help="global truncation cap override")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    common.add_argument("--out", default=None, help="write the report here instead of stdout")
    common.add_argument("--verbose", action="store_true", help="debug logging")

    parser = argparse.ArgumentParser(
        prog="bvcheck",
        description="Exact verification of higher order derivations and BV structures",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, builder: Callable[[argparse.Namespace], SuiteSpec], help_text: str):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(build=builder)
        return p

    p = command("check-order", build_check_order, "classify differential operators on Q[x]|Lambda[t]")
    p.add_argument("--even", type=int, default=1)
    p.add_argument("--odd", type=int, default=0)
    p.add_argument("--operator", action="append", required=True, help='operator expression, optionally "EXPR=ORDER"')
    p.add_argument("--r-max", type=int, default=3)

    p = command("verify-gbva", build_verify_gbva, "generalized BV identities")
    p.add_argument("--algebra", choices=("classical-bv", "multivector", "bc") + LIE_CHOICES, default="classical-bv")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--D", default=None, help="differential D (checks the bracket derivation rule)")
    p.add_argument("--L", default=None, help="the operator [D, Delta] (default 0)")

    p = command("verify-general", build_verify_general, "identities with correction terms for random odd operators")
    p.add_argument("--operators", type=int, default=20)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--structure-seed", type=int, default=0)
    p.add_argument("--mutation", choices=("product", "left", "right", "bracket"), default=None)

    p = command("lie-homology", build_lie_homology, "Chevalley-Eilenberg complexes of a Lie algebra")
    p.add_argument("--lie", choices=LIE_CHOICES, default="sl2")
    p.add_argument("--weil-cap", type=int, default=None)

    p = command("sn-check", build_sn_check, "Schouten-Nijenhuis bracket on multivector fields")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--samples", type=int, default=200)

    p = command("vosa-verify", build_vosa_verify, "bc system mode identities")
    p.add_argument("--modes", type=int, nargs="*", default=[0, 1, 2])
    p.add_argument("--left-modes", type=int, nargs="*", default=[-1, -2])
    p.add_argument("--modes-only", action="store_true", help="skip the other bc identities")

    p = command("master-check", build_master_check, "quantum master equation in the classical BV algebra")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--W", required=True, help="even element expression")
    p.add_argument("--lam", required=True, help="rational lambda, e.g. -2 or 3/2")
    p.add_argument("--k-max", type=int, default=5)

    p = command("run", build_run, "run suite files")
    p.add_argument("suites", nargs="+", help="suite JSON files")

    p = sub.add_parser("list-suites", help="list the suite names a job can use")
    p.set_defaults(build=None)
    return parser


def list_suites() -> None:
    for name in sorted(JOB_SUITES):
        entry = JOB_SUITES[name]
        sys.stdout.write(f"{name:<20}{entry.description} [{', '.join(entry.kinds)}]\n")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.build is None:
        list_suites()
        return EXIT_PASS
    configure_logging(args.verbose)
    try:
        suite = args.build(args).with_overrides(args.seed, args.cap)
        report = SuiteRunner(args.jobs).run(suite)
        emit_report(report, args.format, args.out)
    except ConfigError as e:
        logger.error(str(e))
        return EXIT_CONFIG
    return EXIT_PASS if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
