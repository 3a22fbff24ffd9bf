import json
import os
import tempfile
import unittest
from unittest.mock import patch

from ..BaseTest import BaseTestCase

A3 = "nakayama:m=3,l=2,p=2"
CHECK_NCT = ["check-nct", "--algebra", A3, "--subcat", "S1,S3,P1,P2", "--n", "2"]


class CommandsTestCase(BaseTestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.directory.cleanup()

    def write(self, name, content):
        path = os.path.join(self.directory.name, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(content if isinstance(content, str) else json.dumps(content))
        return path

    def test_check_nct(self):
        from src.nct.workbench.cli import run

        status, output = run(CHECK_NCT)
        self.assertEqual(status, 0)
        self.assertTrue(output.startswith("is_n_cluster_tilting: Pass\n"))
        self.assertIn("  seed: 0", output)

    def test_check_nct_json(self):
        from src.nct.workbench.cli import run

        status, output = run(CHECK_NCT + ["--format", "json"])
        report = json.loads(output)
        self.assertEqual(status, 0)
        self.assertEqual(report["verdict"], "Pass")
        self.assertIsNone(report["elapsed_ms"])
        self.assertEqual(report["certificate"]["inputs"], {"S1": ["S1"], "S3": ["S3"], "P1": ["P1"], "P2": ["P2"]})

    def test_check_nct_fails(self):
        from src.nct.workbench.cli import run

        status, output = run(["check-nct", "--algebra", A3, "--subcat", "S3,P1,P2", "--n", "2", "--format", "json"])
        self.assertEqual(status, 1)
        self.assertEqual(json.loads(output)["counterexample"]["module"], "S1")

    def test_same_seed_same_output(self):
        from src.nct.workbench.cli import run

        argv = ["check-nz", "--algebra", A3, "--subcat", "S1,S3,P1,P2", "--n", "2", "--seed", "7", "--format", "json"]
        first, second = run(argv), run(argv)
        self.assertEqual(first, second)
        self.assertEqual(json.loads(first[1])["seed"], 7)

    def test_every_command_is_deterministic(self):
        from src.nct.workbench.cli.commands import build_parser, run

        quotient = self.write("quotient.json", [[[1, ["a1", "a2"]]]])
        M = ["--subcat", "S1,S3,P1,P2", "--n", "2"]
        commands = {
            "check-nct": M,
            "check-nz": M,
            "ext-table": ["--balance", "--max-degree", "3"],
            "precover": ["--x", "S3,P1,P2", "--module", "S1"],
            "n-kernel": M + ["--from", "P1", "--to", "S1"],
            "n-special-precover": M + ["--x", "S3,P1,P2", "--module", "S1"],
            "check-ncotorsion": M + ["--x", "S3,P1,P2", "--strategy", "relative"],
            "check-left-closed": M + ["--x", "S1,S3"],
            "wakamatsu": M + ["--x", "S3,P1,P2", "--module", "S1"],
            "check-wide": M + ["--w", "P1,S1"],
            "restrict": ["--subcat", "I1,P3,P1,P2", "--x", "P3,P1,P2", "--n", "2", "--quotient", quotient],
            "oracle-search": ["--n", "2"],
        }
        choices = build_parser()._subparsers._group_actions[0].choices
        self.assertEqual(set(commands), set(choices))
        for command, options in commands.items():
            algebra = "nakayama:m=3,l=3,p=2" if command == "restrict" else A3
            argv = [command, "--algebra", algebra] + options + ["--seed", "5", "--format", "json"]
            with self.subTest(command=command):
                first, second = run(argv), run(argv)
                self.assertEqual(first, second)
                self.assertNotEqual(first[0], 3)
                self.assertEqual(json.loads(first[1])["seed"], 5)

    def test_timing(self):
        from src.nct.workbench.cli import run

        status, output = run(CHECK_NCT + ["--format", "json", "--timing"])
        self.assertIsInstance(json.loads(output)["elapsed_ms"], int)

    def test_ext_table(self):
        from src.nct.workbench.cli import run

        status, output = run(["ext-table", "--algebra", A3, "--balance", "--format", "json"])
        report = json.loads(output)
        self.assertEqual(status, 0)
        self.assertEqual(report["certificate"]["degrees"], [0, 1, 2])
        self.assertEqual(report["certificate"]["ext"]["S1"]["S2"], [0, 1, 0])
        self.assertEqual(report["certificate"]["ext"]["S1"]["S3"], [0, 0, 1])
        self.assertEqual(report["certificate"]["ext"]["P1"]["P1"], [1, 0, 0])
        self.assertTrue(report["certificate"]["balanced"])

    def test_precover_and_n_kernel(self):
        from src.nct.workbench.cli import run

        status, output = run(["precover", "--algebra", A3, "--x", "S3,P1,P2", "--module", "S1", "--format", "json"])
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(output)["certificate"]["summands"], ["P1"])

        status, output = run(["n-kernel", "--algebra", A3, "--subcat", "S1,S3,P1,P2", "--n", "2",
                              "--from", "P1", "--to", "S1", "--format", "json"])
        report = json.loads(output)
        self.assertEqual(status, 0)
        self.assertEqual(report["check"], "n_kernel")
        self.assertEqual(len(report["certificate"]["sequence"]["modules"]), 4)

    def test_n_kernel_of_a_given_map(self):
        from src.nct.workbench.cli import run

        cover = self.write("cover.json", [[[1]], [], []])
        status, output = run(["n-kernel", "--algebra", A3, "--subcat", "S1,S3,P1,P2", "--n", "2",
                              "--from", "P1", "--to", "S1", "--map", cover])
        self.assertEqual(status, 0)
        status, output = run(["n-kernel", "--algebra", A3, "--subcat", "S1,S3,P1,P2", "--n", "2",
                              "--from", "S1", "--to", "P1"])
        self.assertEqual(status, 3)

    def test_cotorsion_strategies(self):
        from src.nct.workbench.cli import run

        argv = ["check-ncotorsion", "--algebra", A3, "--subcat", "S1,S3,P1,P2", "--x", "S3,P1,P2", "--n", "2",
                "--format", "json"]
        status, output = run(argv)
        self.assertEqual((status, json.loads(output)["verdict"]), (0, "Pass"))
        status, output = run(argv + ["--strategy", "relative"])
        self.assertEqual((status, json.loads(output)["verdict"]), (0, "PassRelative"))

    def test_left_closed_and_wakamatsu(self):
        from src.nct.workbench.cli import run

        status, _ = run(["check-left-closed", "--algebra", A3, "--subcat", "S1,S3,P1,P2", "--x", "S1,S3", "--n", "2"])
        self.assertEqual(status, 1)
        status, _ = run(["wakamatsu", "--algebra", A3, "--subcat", "S1,S3,P1,P2", "--x", "S1,S3", "--n", "2",
                         "--module", "S1"])
        self.assertEqual(status, 2)

    def test_check_wide(self):
        from src.nct.workbench.cli import run

        status, output = run(["check-wide", "--algebra", A3, "--subcat", "S1,S3,P1,P2", "--w", "P1,S1", "--n", "2",
                              "--format", "json"])
        self.assertEqual(status, 1)
        self.assertEqual(json.loads(output)["counterexample"]["side"], "n-kernel")

    def test_oracle_search(self):
        from src.nct.workbench.cli import run

        status, output = run(["oracle-search", "--algebra", A3, "--n", "2", "--format", "json"])
        report = json.loads(output)
        self.assertEqual(status, 0)
        self.assertEqual(report["certificate"]["hits"], [["S1", "P1", "P2", "S3"]])

    def test_algebra_file(self):
        from src.nct.workbench.algebra import algebra_to_dict
        from src.nct.workbench.cli import run

        path = self.write("a3.json", algebra_to_dict(self.a3))
        status, output = run(["check-nct", "--algebra", path, "--subcat", "I1,P3,P1,P2", "--n", "2",
                              "--format", "json"])
        report = json.loads(output)
        self.assertEqual(status, 0)
        self.assertEqual(report["verdict"], "PassRelative")
        self.assertIn("Declared universe", report["scope"])

        status, output = run(["oracle-search", "--algebra", path, "--n", "2"])
        self.assertEqual(status, 2)

    def test_module_file(self):
        from src.nct.workbench.cli import run

        # S2 ⊕ S3 given as a file, split into its summands
        path = self.write("sum.json", {"dim_vector": [0, 1, 1], "arrows": {}})
        status, output = run(["check-nct", "--algebra", A3, "--subcat", f"S1,P1,P2,{path}", "--n", "2",
                              "--format", "json"])
        report = json.loads(output)
        self.assertEqual(report["certificate"]["inputs"][path], ["S3", "S2"])
        self.assertEqual(status, 1)

    def test_restrict(self):
        from src.nct.workbench.cli import run

        quotient = self.write("quotient.json", [[[1, ["a1", "a2"]]]])
        status, output = run(["restrict", "--algebra", "nakayama:m=3,l=3,p=2", "--quotient", quotient,
                              "--subcat", "I1,P3,P1,P2", "--x", "P3,P1,P2", "--n", "2", "--format", "json"])
        report = json.loads(output)
        self.assertEqual(status, 2)
        self.assertEqual(report["verdict"], "NotApplicable")
        self.assertEqual(report["certificate"]["ext_bijective"], "Fail")

    def test_input_errors(self):
        from src.nct.workbench.cli.commands import INPUT_ERROR, run

        broken = self.write("broken.json", "{\"dim_vector\": [1, 0")
        wrong = self.write("wrong.json", {"dim_vector": [1, 1], "arrows": {}})
        zero = self.write("zero.json", [[[0]], [], []])
        for argv in [
            ["check-nct", "--algebra", A3, "--subcat", "S1", "--n", "0"],
            ["check-nct", "--algebra", A3, "--subcat", "S1", "--n", "two"],
            ["check-nz", "--algebra", A3, "--subcat", "S1", "--n", "2", "--depth", "0"],
            ["ext-table", "--algebra", A3, "--max-degree", "-1"],
            ["precover", "--algebra", A3, "--x", "S3,P1,P2", "--module", "T1"],
            ["n-kernel", "--algebra", A3, "--subcat", "S1,S3,P1,P2", "--n", "2", "--from", "P1", "--to", "S1",
             "--map", zero],
            ["check-nct", "--algebra", A3, "--subcat", broken, "--n", "2"],
            ["check-nct", "--algebra", A3, "--subcat", wrong, "--n", "2"],
            ["check-nct", "--algebra", A3, "--subcat", "S9", "--n", "2"],
            ["check-nct", "--algebra", A3, "--subcat", ",", "--n", "2"],
            ["check-nct", "--algebra", "nakayama:m=3", "--subcat", "S1", "--n", "2"],
            ["check-nct", "--algebra", A3, "--subcat", "S1"],
            ["check-nct", "--algebra", A3, "--subcat", "S1", "--n", "2", "--cap", "0"],
            ["frobnicate", "--algebra", A3],
        ]:
            with self.subTest(argv=argv):
                status, output = run(argv)
                self.assertEqual(status, INPUT_ERROR)
                self.assertTrue(output.startswith("error: "))

    def test_internal_errors_are_alarms(self):
        from src.nct.workbench.cli import run

        argv = ["check-wide", "--algebra", A3, "--subcat", "S1,S3,P1,P2", "--w", "P1,S1", "--n", "2",
                "--format", "json"]
        alarm = ValueError("the rebuilt sequence does not represent the requested class")
        with patch("src.nct.workbench.cli.commands.is_wide", side_effect=alarm), \
                self.assertLogs("src.nct.workbench.cli.commands", "ERROR") as logs:
            status, output = run(argv)
        report = json.loads(output)
        self.assertEqual(status, 2)
        self.assertEqual(report["verdict"], "Inconclusive")
        self.assertEqual(report["counterexample"], {"error": "ValueError", "alarm": str(alarm)})
        self.assertTrue(any("check-wide raised an internal error" in line for line in logs.output))


if __name__ == '__main__':
    unittest.main()
