"""
Testing the instance file format, the runner, the suites and the CLI entry point
"""

import contextlib
from fractions import Fraction
import io
import json
import os
import tempfile
from typing import Any
import unittest

from cli import (
    InstanceFile,
    load_suite_config,
    parse_data,
    parse_instance,
    render,
    run_instance,
    run_suite,
    serialize_instance,
)
from cli.main import EXIT_PASS, EXIT_PROPERTY_FAILURE, EXIT_USAGE, main
from common.errors import ValidationError
from common.verdict import Verdict
from sim.policy import PlayKind

CONFIG_PATH: str = os.path.join(os.path.dirname(__file__), "..", "data", "suites.yaml")

DICTATOR: dict[str, Any] = {
    "domain": "dictator",
    "agents": [
        {"integer": 0, "report": "a"},
        {"integer": 1, "report": "b"},
        {"integer": 1, "report": "c"},
    ],
}

ROUND_TRIPS: dict[str, dict[str, Any]] = {
    "dictator": {
        **DICTATOR,
        "seed": 7,
        "trials": 50,
        "policies": [
            {"kind": "fixed", "value": 2},
            {"kind": "uniform", "report": "a"},
            {"kind": "custom", "weights": {"0": "1/2", "1": "1/2"}},
        ],
    },
    "lrm": {
        "domain": "lrm",
        "agents": [{"integer": 3, "report": "1/2"}, {"integer": 0, "report": 2}],
        "policies": [{"kind": "uniform", "report": "3/4"}, {"kind": "fixed", "value": 1}],
    },
    "tasks": {
        "domain": "tasks",
        "m": 2,
        "t1": ["1", "2"],
        "t2": ["2", "1/3"],
        "true1": ["1", "3"],
        "true2": ["2", "1/3"],
        "bits": [[0, 1], [1, 1]],
    },
    "peer": {
        "domain": "peer",
        "prefs": [[1, 2, 0], [2, 0, 1], [0, 1, 2]],
        "bids": [0, 3, 5],
    },
    "school": {
        "domain": "school",
        "students": [{"prefs": [0]}, {"prefs": [0, 1]}, {"prefs": [1]}],
        "schools": [
            {"capacity": 1, "groups": [[0, 1, 2]]},
            {"capacity": 2, "groups": [[1], [0, 2]]},
        ],
        "mode": "lehmer",
        "bids": [0, 1, 5],
    },
    "alloc-ps": {"domain": "alloc", "prefs": [[0, 1], [1, 0]], "mode": "ps", "sigma": 1},
    "alloc-rp": {"domain": "alloc", "prefs": [[0, 1], [0, 1]], "mode": "rp", "bids": [1, 1]},
}


def invoke(*argv: str) -> tuple[int, str]:
    """Runs main with logs in a scratch directory and returns the exit code and stdout"""
    out: io.StringIO = io.StringIO()
    with tempfile.TemporaryDirectory() as log_dir:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
            code: int = main([*argv, "--quiet", "--log-dir", log_dir])
    return code, out.getvalue()


class TestInstanceFile(unittest.TestCase):
    """
    Testing parse_instance and serialize_instance
    """

    def test_minimal_dictator(self) -> None:
        """
        Asserts a three-agent dictator file parses into reports and bids
        """
        instance: InstanceFile = parse_instance(json.dumps(DICTATOR))
        self.assertEqual(instance.domain, "dictator")
        self.assertEqual(instance.payload, ("a", "b", "c"))
        self.assertEqual(instance.bids, (0, 1, 1))
        self.assertIsNone(instance.policies)

    def test_bid_out_of_range_names_agent(self) -> None:
        """
        Asserts an integer outside [0, n) is rejected with the agent and its path
        """
        data: dict[str, Any] = json.loads(json.dumps(DICTATOR))
        data["agents"][2]["integer"] = 3
        with self.assertRaises(ValidationError) as ctx:
            parse_data(data)
        self.assertEqual(ctx.exception.path, "$.agents[2].integer")
        self.assertIn("agent 2", str(ctx.exception))

    def test_zero_denominator(self) -> None:
        """
        Asserts a "3/0" position is a validation error
        """
        with self.assertRaises(ValidationError) as ctx:
            parse_data({"domain": "lrm", "agents": [{"report": "3/0"}]})
        self.assertEqual(ctx.exception.path, "$.agents[0].report")

    def test_float_rejected(self) -> None:
        """
        Asserts floating point processing times are refused
        """
        with self.assertRaises(ValidationError):
            parse_data({"domain": "tasks", "m": 1, "t1": [0.5], "t2": ["1"]})

    def test_unknown_domain(self) -> None:
        """
        Asserts an unknown domain is reported at $.domain
        """
        with self.assertRaises(ValidationError) as ctx:
            parse_data({"domain": "auction"})
        self.assertEqual(ctx.exception.path, "$.domain")

    def test_nested_entry_not_object(self) -> None:
        """
        Asserts a student entry that is not an object is reported at its path
        """
        with self.assertRaises(ValidationError) as ctx:
            parse_data({"domain": "school", "students": [5], "schools": []})
        self.assertEqual(ctx.exception.path, "$.students[0]")
        with self.assertRaises(ValidationError) as ctx:
            parse_data({"domain": "school", "students": [], "schools": ["x"]})
        self.assertEqual(ctx.exception.path, "$.schools[0]")

    def test_true_times_not_list(self) -> None:
        """
        Asserts true processing times given as a scalar are refused
        """
        data: dict[str, Any] = {**ROUND_TRIPS["tasks"], "true1": 5}
        with self.assertRaises(ValidationError) as ctx:
            parse_data(data)
        self.assertEqual(ctx.exception.path, "$.true1")

    def test_compact_slots_not_list(self) -> None:
        """
        Asserts compact bid slots given as a scalar are refused
        """
        data: dict[str, Any] = {**ROUND_TRIPS["school"], "mode": "compact", "bids": {"a": 1, "b": []}}
        with self.assertRaises(ValidationError) as ctx:
            parse_data(data)
        self.assertEqual(ctx.exception.path, "$.bids.a")

    def test_reports_only_for_voting_domains(self) -> None:
        """
        Asserts a policy report on a peer file is refused
        """
        data: dict[str, Any] = dict(ROUND_TRIPS["peer"])
        data["policies"] = [{"report": 1}, {}, {}]
        with self.assertRaises(ValidationError) as ctx:
            parse_data(data)
        self.assertEqual(ctx.exception.path, "$.policies[0].report")

    def test_policies(self) -> None:
        """
        Asserts fixed, uniform and custom policies are parsed in order
        """
        instance: InstanceFile = parse_data(ROUND_TRIPS["dictator"])
        assert instance.policies is not None
        self.assertEqual(
            [policy.kind for policy in instance.policies],
            [PlayKind.FIXED, PlayKind.UNIFORM, PlayKind.CUSTOM],
        )
        self.assertEqual(instance.policies[1].report, "a")
        self.assertEqual(instance.seed, 7)
        self.assertEqual(instance.trials, 50)

    def test_alloc_sigma_range(self) -> None:
        """
        Asserts sigma must lie below the default (n!)^m game size
        """
        with self.assertRaises(ValidationError) as ctx:
            parse_data({"domain": "alloc", "prefs": [[0, 1], [1, 0]], "sigma": 4})
        self.assertEqual(ctx.exception.path, "$.sigma")

    def test_round_trip(self) -> None:
        """
        Asserts parsing a serialized instance gives back an equal instance for every domain
        """
        name: str
        data: dict[str, Any]
        for name, data in ROUND_TRIPS.items():
            with self.subTest(name=name):
                instance: InstanceFile = parse_data(data)
                self.assertEqual(parse_instance(serialize_instance(instance)), instance)


class TestRunner(unittest.TestCase):
    """
    Testing run_instance
    """

    def test_dictator_outcome(self) -> None:
        """
        Asserts integers 0, 1, 1 elect the third voter's favourite
        """
        self.assertEqual(run_instance(parse_data(DICTATOR)).outcome, "c")

    def test_transcripts_byte_identical(self) -> None:
        """
        Asserts running the same file twice gives byte-identical transcripts
        """
        name: str
        for name in ("dictator", "tasks", "peer", "school", "alloc-ps", "alloc-rp"):
            with self.subTest(name=name):
                instance: InstanceFile = parse_data(ROUND_TRIPS[name])
                self.assertEqual(run_instance(instance).dumps(), run_instance(instance).dumps())

    def test_no_bids(self) -> None:
        """
        Asserts a file without bids cannot be run
        """
        with self.assertRaises(ValidationError):
            run_instance(parse_data({"domain": "peer", "prefs": [[1, 0], [0, 1]]}))


class TestSuites(unittest.TestCase):
    """
    Testing run_suite and the YAML defaults
    """

    def setUp(self) -> None:
        self.config: dict[str, dict[str, Any]] = load_suite_config(CONFIG_PATH)

    def test_every_suite_configured(self) -> None:
        """
        Asserts the YAML file has a section for every suite
        """
        self.assertTrue(
            {"modgame", "permute", "simple", "tasks", "peer", "school", "alloc", "sim"}
            <= set(self.config)
        )

    def test_permute_small(self) -> None:
        """
        Asserts the permutation suite passes at small sizes
        """
        verdicts: list[Verdict] = run_suite("permute", self.config, 0, {"n": 4}, progress=False)
        self.assertEqual({verdict.name for verdict in verdicts}, {"lehmer-bijection", "compact-uniform"})
        self.assertTrue(all(verdicts))

    def test_school_both_modes(self) -> None:
        """
        Asserts the school suite checks stability, replay and strategyproofness under both tie-break modes
        """
        verdicts: list[Verdict] = run_suite("school", self.config, 0, {"n": 3, "samples": 5}, progress=False)
        self.assertEqual(
            [verdict.name for verdict in verdicts], ["stable", "transcript-replay", "student-strategyproof"]
        )
        self.assertTrue(all(verdict.passed for verdict in verdicts))
        replay: Verdict = verdicts[1]
        self.assertGreaterEqual(replay.checked, 2 * 5)

    def test_modgame_quasi_uniform(self) -> None:
        """
        Asserts every sampled quasi-uniform profile is recognised and is an equilibrium
        """
        verdicts: list[Verdict] = run_suite("modgame", self.config, 0, {"n": 3, "samples": 8}, progress=False)
        quasi: list[Verdict] = [verdict for verdict in verdicts if verdict.name == "quasi-uniform-nash"]
        self.assertEqual(len(quasi), 1)
        self.assertTrue(quasi[0].passed)
        self.assertEqual(quasi[0].checked, 8)

    def test_unknown_suite(self) -> None:
        """
        Asserts an unknown suite name is a validation error
        """
        with self.assertRaises(ValidationError):
            run_suite("auctions", self.config, 0, progress=False)


class TestOutput(unittest.TestCase):
    """
    Testing render
    """

    def test_json_sorted_rationals(self) -> None:
        """
        Asserts JSON output sorts keys and prints rationals as num/den
        """
        self.assertEqual(render({"b": Fraction(1, 3), "a": 1}, "json"), '{"a":1,"b":"1/3"}')

    def test_verdict_table(self) -> None:
        """
        Asserts the verdict table has a header and one PASS/FAIL row per verdict
        """
        table: str = render(
            [Verdict.success("stable", 4), Verdict.failure("sd-efficient", {"agent": 1}, 2)], "table"
        )
        lines: list[str] = table.splitlines()
        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[0].startswith("property"))
        self.assertIn("PASS", lines[1])
        self.assertIn("FAIL", lines[2])
        self.assertIn('{"agent":1}', lines[2])


class TestMain(unittest.TestCase):
    """
    Testing the exit codes and output of main
    """

    def setUp(self) -> None:
        self.scratch: tempfile.TemporaryDirectory[str] = tempfile.TemporaryDirectory()

    def tearDown(self) -> None:
        self.scratch.cleanup()

    def write(self, name: str, content: str) -> str:
        """Writes a file into the scratch directory and returns its path"""
        path: str = os.path.join(self.scratch.name, name)
        with open(path, "w", encoding="utf-8") as file:
            file.write(content)
        return path

    def test_run(self) -> None:
        """
        Asserts run prints the outcome and the transcript, identically on every call
        """
        path: str = self.write("dictator.json", json.dumps(DICTATOR))
        code: int
        output: str
        code, output = invoke("run", path)
        self.assertEqual(code, EXIT_PASS)
        document: dict[str, Any] = json.loads(output)
        self.assertEqual(document["outcome"], "c")
        self.assertEqual(document["transcript"]["bids"], [0, 1, 1])
        self.assertEqual(invoke("run", path)[1], output)

    def test_malformed_json(self) -> None:
        """
        Asserts a file that is not JSON exits with 2
        """
        self.assertEqual(invoke("run", self.write("bad.json", "{domain"))[0], EXIT_USAGE)

    def test_invalid_instance(self) -> None:
        """
        Asserts a schema violation exits with 2
        """
        data: dict[str, Any] = json.loads(json.dumps(DICTATOR))
        data["agents"][0]["integer"] = -1
        self.assertEqual(invoke("run", self.write("range.json", json.dumps(data)))[0], EXIT_USAGE)
        wrong: str = json.dumps({"domain": "school", "students": [5], "schools": []})
        self.assertEqual(invoke("run", self.write("type.json", wrong))[0], EXIT_USAGE)

    def test_missing_file(self) -> None:
        """
        Asserts a missing file exits with 2
        """
        self.assertEqual(invoke("run", os.path.join(self.scratch.name, "none.json"))[0], EXIT_USAGE)

    def test_bad_arguments(self) -> None:
        """
        Asserts an unknown suite on the command line exits with 2
        """
        self.assertEqual(invoke("verify", "auctions")[0], EXIT_USAGE)

    def test_verify(self) -> None:
        """
        Asserts a passing suite exits with 0 and lists its verdicts
        """
        code: int
        output: str
        code, output = invoke("verify", "permute", "--n", "3", "--config", CONFIG_PATH)
        self.assertEqual(code, EXIT_PASS)
        self.assertNotEqual(code, EXIT_PROPERTY_FAILURE)
        self.assertTrue(all(verdict["passed"] for verdict in json.loads(output)))

    def test_verify_default_config_from_other_directory(self) -> None:
        """
        Asserts verify finds its default suite file when started outside the repository
        """
        cwd: str = os.getcwd()
        os.chdir(self.scratch.name)
        try:
            code: int = invoke("verify", "permute", "--n", "3")[0]
        finally:
            os.chdir(cwd)
        self.assertEqual(code, EXIT_PASS)

    def test_simulate(self) -> None:
        """
        Asserts simulate takes trials and seed from the file and reports a distance
        """
        data: dict[str, Any] = {**DICTATOR, "trials": 300, "seed": 3}
        path: str = self.write("sim.json", json.dumps(data))
        code: int
        output: str
        code, output = invoke("simulate", path)
        self.assertEqual(code, EXIT_PASS)
        report: dict[str, Any] = json.loads(output)
        self.assertEqual(report["trials"], 300)
        self.assertEqual(report["master_seed"], 3)
        self.assertEqual(sum(report["outcome_frequencies"].values()), 300)
        self.assertIsNotNone(report["empirical_tv"])
        self.assertEqual(invoke("simulate", path)[1], output)

    def test_exact_dist(self) -> None:
        """
        Asserts three uniform voters elect each favourite with probability 1/3
        """
        path: str = self.write("exact.json", json.dumps(DICTATOR))
        code: int
        output: str
        code, output = invoke("exact-dist", path)
        self.assertEqual(code, EXIT_PASS)
        document: dict[str, Any] = json.loads(output)
        self.assertEqual(document["modulus"], 3)
        self.assertEqual(document["game"], {"0": "1/3", "1": "1/3", "2": "1/3"})
        self.assertEqual(document["outcomes"], {'"a"': "1/3", '"b"': "1/3", '"c"': "1/3"})


if __name__ == "__main__":
    unittest.main()
