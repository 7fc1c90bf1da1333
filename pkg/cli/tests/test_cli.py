# Unit tests for suite files, job execution and report emission.
import copy
import glob
import json
import os
import subprocess
import sys
import tempfile
import unittest
from fractions import Fraction

import jsonschema

from base.enums import CheckStatus
from base.errors import ConfigError
from base.polynomial import PolynomialSuperalgebra
from cli.builders import build_workspace
from cli.config import JobSpec, SuiteSpec, load_suite, parse_suite
from cli.emit import emit_report, load_schema, render_json, render_text, report_data
from cli.expressions import parse_element, parse_operator, parse_scalar, tokenize
from cli.jobs import get_suite
from cli.runner import RunReport, SuiteRunner

ROOT_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..'))

SECOND_DERIVATIVE = {
    "name": "second-derivative",
    "suite": "check-order",
    "algebra": {"kind": "polynomial", "even": 1},
    "operators": {"d2": {"expr": "d/dx1 . d/dx1", "order": 2}},
}

AFF1_HOMOLOGY = {
    "name": "aff1",
    "suite": "lie-homology",
    "algebra": {"kind": "lie", "lie": "aff1"},
    "params": {"expected": {"homology": [1, 1, 0]}},
}

GENERAL = {
    "name": "general",
    "suite": "verify-general",
    "algebra": {"kind": "random-structure", "seed": 7},
    "params": {"random_operators": 2, "samples": 30},
}

CORRUPTED_LIE = {
    "name": "corrupted-sl2",
    "suite": "lie-homology",
    "algebra": {
        "kind": "lie",
        "lie": {
            "names": ["e", "f", "h"],
            "triples": [[0, 1, 2, 1], [2, 0, 0, -2], [2, 1, 1, -2]],
            "validate": False,
            "name": "sl2-corrupted",
        },
    },
}


def suite_of(*jobs, **extra) -> SuiteSpec:
    data = {"version": 1, "jobs": [copy.deepcopy(job) for job in jobs]}
    data.update(extra)
    return SuiteSpec.from_dict(data, "<test>")


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "cli", *args],
        capture_output=True,
        text=True,
        cwd=ROOT_DIR,
    )


class TestSuiteConfig(unittest.TestCase):
    def test_syntax_error_has_position(self):
        with self.assertRaises(ConfigError) as ctx:
            parse_suite('{\n  "jobs": [,]\n}', "broken.json")
        self.assertEqual(ctx.exception.line, 2)
        self.assertEqual(ctx.exception.column, 12)
        self.assertIn("(line 2, column 12)", str(ctx.exception))
        self.assertIn("broken.json", str(ctx.exception))

    def test_defaults_apply_under_job_params(self):
        suite = suite_of(
            dict(SECOND_DERIVATIVE, params={"r_max": 2}),
            defaults={"r_max": 4, "samples": 9},
        )
        job = suite.jobs[0]
        self.assertEqual(job.param("r_max"), 2)
        self.assertEqual(job.param("samples"), 9)
        self.assertEqual(job.seed, 0)

    def test_string_algebra(self):
        job = JobSpec.from_dict({"suite": "vosa-verify", "algebra": "bc"})
        self.assertEqual(job.algebra, {"kind": "bc"})

    def test_rejected_shapes(self):
        bad = [
            {"version": 2, "jobs": []},
            {"jobs": {}},
            {"jobs": [{"algebra": "bc"}]},
            {"jobs": [dict(SECOND_DERIVATIVE, params={"seed": "one"})]},
            {"jobs": [dict(SECOND_DERIVATIVE, params={"cap": 0})]},
            {"jobs": [dict(SECOND_DERIVATIVE, params={"weil_cap": True})]},
            {"jobs": [SECOND_DERIVATIVE, SECOND_DERIVATIVE]},
        ]
        for data in bad:
            with self.assertRaises(ConfigError, msg=data):
                SuiteSpec.from_dict(copy.deepcopy(data))

    def test_empty_suite_warns(self):
        with self.assertLogs("cli.config", level="WARNING"):
            suite = parse_suite('{"jobs": []}')
        self.assertEqual(suite.jobs, [])

    def test_overrides(self):
        suite = suite_of(SECOND_DERIVATIVE).with_overrides(seed=5, cap=3)
        self.assertEqual(suite.jobs[0].seed, 5)
        self.assertEqual(suite.jobs[0].param("cap"), 3)
        with self.assertRaises(ConfigError):
            suite.with_overrides(cap=0)

    def test_missing_file(self):
        with self.assertRaises(ConfigError):
            load_suite(os.path.join(ROOT_DIR, "suites", "missing.json"))


class TestExpressions(unittest.TestCase):
    def setUp(self):
        self.alg = PolynomialSuperalgebra(2, 2, 4)

    def test_element(self):
        value = parse_element(self.alg, "3/2 * x1^2*t1 - x2")
        expected = self.alg.monomial([2, 0], (0,), Fraction(3, 2)) - self.alg.monomial([0, 1])
        self.assertEqual(value, expected)

    def test_odd_order_matters(self):
        self.assertEqual(parse_element(self.alg, "t2*t1"), -parse_element(self.alg, "t1*t2"))

    def test_numbers_only(self):
        self.assertEqual(parse_element(self.alg, "2 * 3"), self.alg.unit().scale(6))

    def test_operator(self):
        op = parse_operator(self.alg, "[x1] . d/dx1")
        self.assertEqual(op.label, "[x1] . d/dx1")
        self.assertEqual(op.apply(parse_element(self.alg, "x1^2*x2")), parse_element(self.alg, "2*x1^2*x2"))

    def test_named_operator(self):
        twice = parse_operator(self.alg, "d/dx1")
        op = parse_operator(self.alg, "D . D", {"D": twice})
        self.assertEqual(op.apply(parse_element(self.alg, "x1^3")), parse_element(self.alg, "6*x1"))

    def test_error_column(self):
        with self.assertRaises(ConfigError) as ctx:
            tokenize("x1 + $")
        self.assertEqual(ctx.exception.column, 6)
        with self.assertRaises(ConfigError):
            parse_element(self.alg, "y1")
        with self.assertRaises(ConfigError):
            parse_element(self.alg, "x1 +")

    def test_scalars(self):
        self.assertEqual(parse_scalar("-3/2"), Fraction(-3, 2))
        self.assertEqual(parse_scalar(4), 4)
        for value in (0.5, True, "1/0", "two"):
            with self.assertRaises(ConfigError, msg=value):
                parse_scalar(value)


class TestBuilders(unittest.TestCase):
    def job(self, **fields):
        data = copy.deepcopy(SECOND_DERIVATIVE)
        data.update(fields)
        return JobSpec.from_dict(data)

    def test_unknown_algebra_kind(self):
        with self.assertRaises(ConfigError) as ctx:
            build_workspace(self.job(algebra={"kind": "octonions"}))
        self.assertIn("unknown algebra kind", str(ctx.exception))
        self.assertIn("second-derivative", str(ctx.exception))

    def test_unknown_operator_kind(self):
        with self.assertRaises(ConfigError):
            build_workspace(self.job(operators={"X": {"kind": "wave"}}))

    def test_operators_see_earlier_names(self):
        ws = build_workspace(self.job(operators={"D": "d/dx1", "D2": "D . D", "C": {"expr": "D2 - D . D", "order": 0}}))
        self.assertEqual(ws.operators["C"].label, "C")
        self.assertEqual(ws.orders, {"C": 0})
        self.assertTrue(ws.operators["C"].apply(ws.element("x1^3")).is_zero())

    def test_default_caps(self):
        self.assertEqual(build_workspace(self.job()).cap, 8)
        self.assertEqual(build_workspace(self.job(params={"cap": 3})).cap, 3)

    def test_unknown_suite(self):
        with self.assertRaises(ConfigError):
            get_suite("verify-everything")

    def test_suite_rejects_algebra_kind(self):
        job = self.job(suite="vosa-verify")
        with self.assertRaises(ConfigError):
            SuiteRunner().prepare(SuiteSpec([job]))

    def test_general_needs_operators(self):
        job = JobSpec.from_dict(dict(GENERAL, params={}))
        with self.assertRaises(ConfigError):
            SuiteRunner().prepare(SuiteSpec([job]))


class TestRunner(unittest.TestCase):
    def test_statuses(self):
        report = SuiteRunner().run(suite_of(SECOND_DERIVATIVE, AFF1_HOMOLOGY, GENERAL))
        self.assertTrue(report.passed, render_text(report))
        self.assertEqual(report.summary()["pass"], 3)
        order = report.jobs[0].reports[0]
        self.assertEqual(order.order, 2)
        self.assertEqual(order.expected, 2)

    def test_expected_mismatch_fails(self):
        job = copy.deepcopy(SECOND_DERIVATIVE)
        job["operators"]["d2"]["order"] = 1
        report = SuiteRunner().run(suite_of(job))
        self.assertFalse(report.passed)
        self.assertEqual(report.jobs[0].status, CheckStatus.FAIL)

    def test_wrong_homology_dimensions_fail(self):
        job = copy.deepcopy(AFF1_HOMOLOGY)
        job["params"]["expected"]["homology"] = [1, 2, 1]
        report = SuiteRunner().run(suite_of(job))
        self.assertEqual(report.jobs[0].status, CheckStatus.FAIL)
        self.assertIn("differ from", render_text(report))

    def test_corrupted_lie_table_fails(self):
        report = SuiteRunner().run(suite_of(CORRUPTED_LIE))
        job = report.jobs[0]
        self.assertEqual(job.status, CheckStatus.FAIL)
        self.assertEqual([r.name for r in job.reports], ["leibniz[sl2-corrupted]"])
        self.assertIsNotNone(job.reports[0].counterexample)

    def test_refused_delta(self):
        job = {
            "name": "third-order",
            "suite": "verify-gbva",
            "algebra": {"kind": "polynomial", "even": 1, "odd": 1},
            "operators": {"delta": "d/dx1 . d/dx1 . d/dt1"},
            "params": {"cap": 4},
        }
        report = SuiteRunner().run(suite_of(job))
        self.assertEqual(report.jobs[0].status, CheckStatus.REFUSED)
        self.assertEqual(report.jobs[0].reports[0].details["flag"], "order_le_2")
        self.assertEqual(report.jobs[0].flag, "order_le_2")
        self.assertEqual(report.summary()["refused"], 1)

    def test_bracket_mutation_is_detected(self):
        clean = SuiteRunner().run(suite_of(GENERAL))
        self.assertTrue(clean.passed, render_text(clean))
        mutated_job = copy.deepcopy(GENERAL)
        mutated_job["params"]["mutation"] = "bracket"
        mutated = SuiteRunner().run(suite_of(mutated_job))
        self.assertFalse(mutated.passed)
        failing = [r for r in mutated.jobs[0].reports if not r.passed]
        self.assertTrue(failing)
        text = render_text(mutated)
        marked = [r for r in failing if r.counterexample is not None]
        self.assertEqual(text.count("COUNTEREXAMPLE"), len(marked))

    def test_job_errors_do_not_stop_the_run(self):
        job = copy.deepcopy(SECOND_DERIVATIVE)
        job["name"] = "bad-r-max"
        job["params"] = {"r_max": 0}
        report = SuiteRunner().run(suite_of(job, AFF1_HOMOLOGY))
        self.assertEqual(report.jobs[0].status, CheckStatus.FAIL)
        self.assertTrue(report.jobs[0].error.startswith("ValueError"))
        self.assertEqual(report.jobs[1].status, CheckStatus.PASS)

    def test_parallel_matches_sequential(self):
        suite = suite_of(SECOND_DERIVATIVE, AFF1_HOMOLOGY, GENERAL)
        one = SuiteRunner(1).run(suite)
        two = SuiteRunner(2).run(suite)
        self.assertEqual(render_text(one), render_text(two))
        strip = lambda data: [dict(job, wall_time=0) for job in data["jobs"]]
        self.assertEqual(strip(report_data(one)), strip(report_data(two)))


class TestEmit(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.report = SuiteRunner().run(suite_of(SECOND_DERIVATIVE, AFF1_HOMOLOGY))

    def test_json_matches_schema(self):
        data = json.loads(render_json(self.report))
        jsonschema.validate(data, load_schema())
        self.assertEqual(data["summary"]["jobs"], 2)
        self.assertEqual(data["jobs"][0]["reports"][0]["kind"], "order")

    def test_reemission_is_byte_identical(self):
        text = render_json(self.report)
        again = render_json(RunReport.from_dict(json.loads(text)))
        self.assertEqual(text, again)

    def test_schema_rejects_bad_status(self):
        data = report_data(self.report)
        data["jobs"][0]["status"] = "maybe"
        with self.assertRaises(jsonschema.ValidationError):
            jsonschema.validate(data, load_schema())

    def test_text_has_no_wall_time(self):
        text = render_text(self.report)
        self.assertTrue(text.startswith("run <test>: PASS (2/2 jobs passed)"))
        self.assertIn("job second-derivative [check-order]: PASS", text)
        self.assertIn("order(d2) = 2 (expected 2)", text)
        self.assertNotIn("wall_time", text)

    def test_write_to_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "report.json")
            text = emit_report(self.report, "json", path)
            with open(path, "r", encoding="utf-8") as f:
                self.assertEqual(f.read(), text)
            with self.assertRaises(ConfigError):
                emit_report(self.report, "text", os.path.join(tmp, "missing", "report.txt"))


class TestBundledSuites(unittest.TestCase):
    def test_bundled_suites_resolve(self):
        paths = sorted(glob.glob(os.path.join(ROOT_DIR, "suites", "*.json")))
        self.assertTrue(paths)
        for path in paths:
            suite = load_suite(path)
            self.assertTrue(suite.jobs, path)
            SuiteRunner().prepare(suite)

    def test_bundled_suites_exit_codes(self):
        paths = sorted(glob.glob(os.path.join(ROOT_DIR, "suites", "*.json")))
        for path in paths:
            name = os.path.basename(path)
            expected = 1 if name == "corrupted.suite.json" else 0
            with self.subTest(suite=name):
                result = run_cli("run", path, "--format", "json")
                failing = []
                if result.stdout:
                    data = json.loads(result.stdout)
                    failing = [job["name"] for job in data["jobs"] if job["status"] != "pass"]
                self.assertEqual(result.returncode, expected, (failing, result.stderr[-2000:]))


class TestCommandLine(unittest.TestCase):
    def test_pass_exit_code(self):
        result = run_cli("check-order", "--operator", "d/dx1 . d/dx1=2", "--format", "json")
        self.assertEqual(result.returncode, 0, result.stderr)
        data = json.loads(result.stdout)
        self.assertEqual(data["status"], "pass")
        self.assertEqual(data["jobs"][0]["reports"][0]["order"], 2)

    def test_failure_exit_code(self):
        result = run_cli("check-order", "--operator", "d/dx1 . d/dx1=1")
        self.assertEqual(result.returncode, 1, result.stderr)
        self.assertIn("FAIL", result.stdout)

    def test_config_error_exit_code(self):
        self.assertEqual(run_cli("run", os.path.join("suites", "missing.json")).returncode, 2)
        bad = run_cli("check-order", "--operator", "d/dy9")
        self.assertEqual(bad.returncode, 2)
        self.assertIn("ERROR", bad.stderr)
        self.assertEqual(run_cli("check-order").returncode, 2)

    def test_unwritable_out(self):
        with tempfile.TemporaryDirectory() as tmp:
            out = os.path.join(tmp, "missing", "report.txt")
            result = run_cli("lie-homology", "--lie", "abelian2", "--out", out)
        self.assertEqual(result.returncode, 2)

    def test_corrupted_suite_fails(self):
        result = run_cli("run", os.path.join("suites", "corrupted.suite.json"), "--format", "json")
        self.assertEqual(result.returncode, 1, result.stderr)
        data = json.loads(result.stdout)
        self.assertTrue(all(job["status"] == "fail" for job in data["jobs"]))

    def test_list_suites(self):
        result = run_cli("list-suites")
        self.assertEqual(result.returncode, 0)
        self.assertIn("master-check", result.stdout)


if __name__ == '__main__':
    unittest.main()
