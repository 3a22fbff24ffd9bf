import unittest

from ..BaseTest import BaseTestCase


class UniverseTestCase(BaseTestCase):
    def test_catalog_labels(self):
        U = self.a3_universe
        self.assertTrue(U.is_complete)
        self.assertEqual(len(U), 5)
        self.assertEqual(U.labels, ["S1", "P1", "S2", "P2", "S3"])
        self.assertEqual(repr(U), "Universe(Complete, S1, P1, S2, P2, S3)")

    def test_lookup(self):
        U = self.a3_universe
        self.assertIs(U.lookup("P3"), U.lookup("S3"))
        self.assertIs(U.lookup("I2"), U.lookup("P1"))
        self.assertIs(U.lookup("P_2"), U.lookup("M[2,3]"))
        self.assertIs(U.lookup("I1"), U[0])
        with self.assertRaises(KeyError):
            U.lookup("S4")

    def test_subcat_drops_duplicates(self):
        M = self.a3_universe.subcat(["S1", "I1", "P1", "S_1"], name="M")
        self.assertEqual(M.labels, ["S1", "P1"])
        self.assertEqual(M.name, "M")

    def test_index_of(self):
        from src.nct.workbench.algebra import injective_modules, projective_modules

        U = self.a3_universe
        self.assertEqual([U.index_of(P) for P in projective_modules(self.a3)], [1, 3, 4])
        self.assertEqual([U.index_of(I) for I in injective_modules(self.a3)], [0, 1, 3])

    def test_members_of(self):
        members = self.a3_universe.members_of(self.a3_cluster_tilting())
        self.assertEqual([m.label for m in members], ["S1", "P1", "P2", "S3"])

    def test_finalize(self):
        from src.nct.workbench.checks import Universe
        from src.nct.workbench.shared import CheckReport, Verdict

        report = CheckReport("sample", Verdict.PASS, "all pairs")
        complete = self.a3_universe.finalize(report)
        self.assertEqual(complete.verdict, Verdict.PASS)
        self.assertEqual(complete.scope, "all pairs; Complete universe of 5 indecomposables over nakayama:m=3,l=2,p=2")

        declared = Universe.declared(self.a3, list(self.a3_universe), name="A3")
        relative = declared.finalize(report)
        self.assertEqual(relative.verdict, Verdict.PASS_RELATIVE)
        self.assertEqual(relative.scope, "all pairs; Declared universe of 5 indecomposables over A3")
        self.assertEqual(relative.exit_code, 0)

        failed = declared.finalize(CheckReport("sample", Verdict.FAIL))
        self.assertEqual(failed.verdict, Verdict.FAIL)
        self.assertEqual(failed.scope, "Declared universe of 5 indecomposables over A3")

    def test_wrong_algebra(self):
        from src.nct.workbench.checks import Completeness, Universe

        with self.assertRaises(ValueError):
            Universe(self.a3, [self.dual_numbers_universe[0]])
        with self.assertRaises(ValueError):
            Universe(self.a3, [self.a3_module("S1")], Completeness.DECLARED, {"T": 1})

    def test_validate(self):
        from src.nct.workbench.checks import Universe
        from src.nct.workbench.modules import direct_sum

        S1, S3 = self.a3_module("S1"), self.a3_module("S3")
        Universe.declared(self.a3, [S1, S3]).validate()
        with self.assertRaises(ValueError):
            Universe.declared(self.a3, [S1, S1.renamed("copy")]).validate()
        with self.assertRaises(ValueError):
            Universe.declared(self.a3, [direct_sum([S1, S3]).module]).validate()


if __name__ == '__main__':
    unittest.main()
