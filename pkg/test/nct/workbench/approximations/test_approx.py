import unittest
from dataclasses import replace

from ..BaseTest import BaseTestCase


class RightApproxTestCase(BaseTestCase):
    def test_evaluation_map(self):
        from src.nct.workbench.approximations import right_approx

        M = self.a3_cluster_tilting()
        r = right_approx(M, self.a3_module("P1"))
        self.assertEqual(r.summands, (2, 3))
        self.assertTrue(r.surjective)
        self.assertIsNone(r.failure())
        self.assertFalse(r.minimal)
        self.assertIs(r.approximated, self.a3_module("P1"))
        self.assertEqual(len(r.components()), 2)

    def test_minimal_drops_redundant_summands(self):
        from src.nct.workbench.approximations import minimal_right_approx

        M = self.a3_cluster_tilting()
        r = minimal_right_approx(M, self.a3_module("P1"))
        self.assertEqual(r.summands, (2,))
        self.assertTrue(r.minimal)
        self.assertTrue(r.map.is_isomorphism())
        self.assertEqual(r.to_dict(), {"approximated": "P1", "side": "right", "summands": ["P1"],
                                       "minimal": True, "surjective": True})

    def test_precover_of_a_simple(self):
        from src.nct.workbench.approximations import minimal_right_approx

        M = self.a3_cluster_tilting()
        r = minimal_right_approx(M, self.a3_module("S2"))
        self.assertEqual([M.labels[k] for k in r.summands], ["P2"])
        self.assertTrue(r.surjective)

    def test_force_epi(self):
        from src.nct.workbench.approximations import right_approx

        r = right_approx(self.a3_subcat("S1"), self.a3_module("S2"), force_epi=True)
        self.assertFalse(r.surjective)
        self.assertTrue(r.module.is_zero())
        self.assertIn("not surjective", r.note)
        self.assertEqual(right_approx(self.a3_subcat("S1"), self.a3_module("S2")).note, "")

    def test_failure_detects_a_broken_map(self):
        from src.nct.workbench.approximations import right_approx
        from src.nct.workbench.modules import zero_map

        r = right_approx(self.a3_cluster_tilting(), self.a3_module("P1"))
        broken = replace(r, map=zero_map(r.module, self.a3_module("P1")))
        self.assertIsNotNone(broken.failure())

    def test_contains_projectives(self):
        from src.nct.workbench.approximations import contains_projectives

        self.assertTrue(contains_projectives(self.a3_cluster_tilting(), self.a3))
        self.assertFalse(contains_projectives(self.a3_subcat("S1", "P1"), self.a3))


class LeftApproxTestCase(BaseTestCase):
    def test_envelope_of_a_simple(self):
        from src.nct.workbench.approximations import left_approx, minimal_left_approx

        M = self.a3_cluster_tilting()
        r = left_approx(M, self.a3_module("S2"))
        self.assertTrue(r.left)
        self.assertEqual(r.summands, (2,))
        self.assertTrue(r.injective)
        self.assertIsNone(r.failure())
        minimal = minimal_left_approx(M, self.a3_module("P2"))
        self.assertEqual(minimal.summands, (3,))
        self.assertTrue(minimal.minimal)
        self.assertEqual(minimal.to_dict()["side"], "left")

    def test_sides_are_checked(self):
        from src.nct.workbench.approximations import left_approx, left_minimalize, right_approx, right_minimalize

        M = self.a3_cluster_tilting()
        with self.assertRaises(ValueError):
            right_minimalize(left_approx(M, self.a3_module("S2")))
        with self.assertRaises(ValueError):
            left_minimalize(right_approx(M, self.a3_module("S2")))


class MinimalityTestCase(BaseTestCase):
    def test_verification_respects_the_cap(self):
        from src.nct.workbench.approximations import right_approx, right_minimalize
        from src.nct.workbench.shared import MinimalityInconclusiveError

        universe = self.dual_numbers_universe
        C = universe.subcat(["P1"])
        r = right_approx(C, universe.lookup("S1"))
        with self.assertRaises(MinimalityInconclusiveError):
            right_minimalize(r, cap=1)
        relaxed = right_minimalize(r, cap=1, strict=False)
        self.assertFalse(relaxed.minimal)
        self.assertIn("not verified", relaxed.note)
        self.assertTrue(right_minimalize(r).minimal)


if __name__ == '__main__':
    unittest.main()
