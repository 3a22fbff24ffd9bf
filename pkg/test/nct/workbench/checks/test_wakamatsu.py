import unittest

from ..BaseTest import BaseTestCase


class LeftClosedTestCase(BaseTestCase):
    def test_projectives_have_no_extensions(self):
        from src.nct.workbench.checks import is_left_closed_under_n_extensions
        from src.nct.workbench.shared import Verdict

        X = self.a3_subcat("S3", "P1", "P2")
        report = is_left_closed_under_n_extensions(X, self.a3_cluster_tilting(), 2)
        self.assertEqual(report.verdict, Verdict.PASS)
        self.assertTrue(all(count == 0 for count in report.certificate["classes"].values()))

    def test_cluster_tilting_is_closed(self):
        from src.nct.workbench.checks import is_left_closed_under_n_extensions
        from src.nct.workbench.shared import Verdict

        M = self.a3_cluster_tilting()
        report = is_left_closed_under_n_extensions(M, M, 2)
        self.assertEqual(report.verdict, Verdict.PASS)
        self.assertEqual(report.certificate["classes"]["Ext^2(S1, S3)"], 1)
        self.assertEqual(report.certificate["classes"]["Ext^2(S3, S1)"], 0)

    def test_middle_term_escapes(self):
        from src.nct.workbench.checks import is_left_closed_under_n_extensions
        from src.nct.workbench.shared import Verdict

        report = is_left_closed_under_n_extensions(self.a3_subcat("S1", "S3"), self.a3_cluster_tilting(), 2)
        self.assertEqual(report.verdict, Verdict.FAIL)
        self.assertEqual(report.counterexample["left"], "S3")
        self.assertEqual(report.counterexample["right"], "S1")
        self.assertEqual(report.counterexample["class"], [1])
        self.assertEqual(report.counterexample["middle_term"], [0, 1, 1])

    def test_enumeration_cap(self):
        from src.nct.workbench.checks import is_left_closed_under_n_extensions
        from src.nct.workbench.shared import EnumerationTooLargeError

        with self.assertRaises(EnumerationTooLargeError):
            is_left_closed_under_n_extensions(self.a3_subcat("S1", "S3"), self.a3_cluster_tilting(), 2, cap=1)


class WakamatsuTestCase(BaseTestCase):
    def test_projective_cover(self):
        from src.nct.workbench.checks import wakamatsu_check
        from src.nct.workbench.shared import Verdict

        X = self.a3_subcat("S3", "P1", "P2")
        report = wakamatsu_check(X, self.a3_cluster_tilting(), self.a3_module("S1"), 2)
        self.assertEqual(report.verdict, Verdict.PASS)
        self.assertEqual(report.certificate["hypotheses"], {"is_nZ": "Pass", "left_closed": "Pass"})
        self.assertEqual(report.certificate["cover"]["summands"], ["P1"])
        self.assertTrue(all(report.certificate["ext_monomorphism"].values()))

    def test_identity_cover(self):
        from src.nct.workbench.checks import wakamatsu_check
        from src.nct.workbench.shared import Verdict

        M = self.a3_cluster_tilting()
        self.assertEqual(wakamatsu_check(M, M, self.a3_module("S1"), 2).verdict, Verdict.PASS)

    def test_hypotheses(self):
        from src.nct.workbench.checks import wakamatsu_check
        from src.nct.workbench.shared import Verdict

        report = wakamatsu_check(self.a3_subcat("S1", "S3"), self.a3_cluster_tilting(), self.a3_module("S1"), 2)
        self.assertEqual(report.verdict, Verdict.NOT_APPLICABLE)
        self.assertEqual(report.certificate, {"is_nZ": "Pass", "left_closed": "Fail"})

    def test_no_surjective_cover(self):
        from src.nct.workbench.checks import wakamatsu_check
        from src.nct.workbench.shared import Verdict

        X = self.a3_subcat("S3", "P2")
        report = wakamatsu_check(X, self.a3_cluster_tilting(), self.a3_module("S1"), 2)
        self.assertEqual(report.verdict, Verdict.NOT_APPLICABLE)
        self.assertEqual(report.counterexample["module"], "S1")


class WakamatsuBatteryTestCase(BaseTestCase):
    def test_never_fails_on_certified_pairs(self):
        import itertools

        from src.nct.workbench.algebra import projective_modules
        from src.nct.workbench.checks import wakamatsu_check
        from src.nct.workbench.modules import Subcat
        from src.nct.workbench.shared import Verdict

        for m, l, n in ((3, 2, 2), (5, 2, 2), (4, 2, 3)):
            _, M = self.certified_pair(m, l, n)
            required = {M.index_of(P) for P in projective_modules(M[0].algebra)}
            optional = [k for k in range(len(M)) if k not in required]
            passes = 0
            for r in range(len(optional) + 1):
                for extra in itertools.combinations(optional, r):
                    X = Subcat([M[k] for k in sorted(required.union(extra))], name="X")
                    for module in M:
                        with self.subTest(algebra=f"A_{m}/rad^{l}", X=X.labels, module=module.label):
                            report = wakamatsu_check(X, M, module, n)
                            self.assertNotEqual(report.verdict, Verdict.FAIL, report.counterexample)
                            if report.verdict is Verdict.PASS:
                                self.assertTrue(all(report.certificate["ext_monomorphism"].values()))
                                passes += 1
            with self.subTest(algebra=f"A_{m}/rad^{l}"):
                self.assertGreater(passes, 0)


if __name__ == '__main__':
    unittest.main()
