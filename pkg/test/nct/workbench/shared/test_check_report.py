import json
import unittest


class VerdictTestCase(unittest.TestCase):
    def test_exit_codes(self):
        from src.nct.workbench.shared import Verdict

        codes = {verdict: verdict.exit_code for verdict in Verdict}
        self.assertEqual(codes, {
            Verdict.PASS: 0,
            Verdict.PASS_RELATIVE: 0,
            Verdict.FAIL: 1,
            Verdict.INCONCLUSIVE: 2,
            Verdict.NOT_APPLICABLE: 2,
        })
        self.assertEqual(Verdict("PassRelative"), Verdict.PASS_RELATIVE)

    def test_combine(self):
        from src.nct.workbench.shared import Verdict, combine_verdicts

        self.assertEqual(combine_verdicts([]), Verdict.PASS)
        self.assertEqual(combine_verdicts([Verdict.PASS, Verdict.PASS_RELATIVE]), Verdict.PASS_RELATIVE)
        self.assertEqual(combine_verdicts([Verdict.NOT_APPLICABLE, Verdict.INCONCLUSIVE]), Verdict.INCONCLUSIVE)
        self.assertEqual(combine_verdicts(iter([Verdict.INCONCLUSIVE, Verdict.FAIL, Verdict.PASS])), Verdict.FAIL)


class CheckReportTestCase(unittest.TestCase):
    def report(self):
        from src.nct.workbench.shared import CheckReport, Verdict

        return CheckReport("sample", Verdict.FAIL, "all pairs", {"b": [1, 2], "a": "Λ"},
                           {"module": "S1"}, seed=3)

    def test_to_json(self):
        report = self.report()
        text = report.to_json()
        self.assertEqual(json.loads(text), {
            "check": "sample",
            "verdict": "Fail",
            "scope": "all pairs",
            "certificate": {"a": "Λ", "b": [1, 2]},
            "counterexample": {"module": "S1"},
            "seed": 3,
            "elapsed_ms": None,
        })
        self.assertIn("Λ", text)
        self.assertEqual(text, self.report().to_json())
        self.assertEqual(report.to_dict()["certificate"], {"a": "Λ", "b": [1, 2]})

    def test_to_text(self):
        self.assertEqual(self.report().to_text(), "\n".join([
            "sample: Fail",
            "  scope: all pairs",
            '  a: "Λ"',
            "  b: [1, 2]",
            '  counterexample: {"module": "S1"}',
            "  seed: 3",
        ]))

    def test_relative_and_timed(self):
        from src.nct.workbench.shared import CheckReport, Verdict

        passed = CheckReport("sample", Verdict.PASS)
        relative = passed.relative_to("declared")
        self.assertEqual((relative.verdict, relative.scope), (Verdict.PASS_RELATIVE, "declared"))
        self.assertEqual(passed.verdict, Verdict.PASS)
        self.assertEqual(self.report().relative_to("declared").verdict, Verdict.FAIL)
        self.assertEqual(passed.timed(12).elapsed_ms, 12)
        self.assertTrue(relative.passed)
        self.assertFalse(self.report().passed)
        self.assertEqual(self.report().exit_code, 1)


if __name__ == '__main__':
    unittest.main()
