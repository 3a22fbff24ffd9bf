import unittest

from ..BaseTest import BaseTestCase


class OracleTestCase(BaseTestCase):
    def test_two_cluster_tilting(self):
        from src.nct.workbench.catalog import brute_force_nct_search

        hits = brute_force_nct_search(self.a3_universe, 2)
        self.assertEqual([h.labels for h in hits], [["S1", "P1", "P2", "S3"]])

    def test_no_three_cluster_tilting(self):
        from src.nct.workbench.catalog import brute_force_nct_search

        # S1 and S3 are both required, and Ext^2(S1, S3) is not zero
        self.assertEqual(brute_force_nct_search(self.a3_universe, 3), [])

    def test_one_cluster_tilting(self):
        from src.nct.workbench.catalog import brute_force_nct_search

        hits = brute_force_nct_search(self.a3_universe, 1)
        self.assertEqual([h.labels for h in hits], [["S1", "P1", "S2", "P2", "S3"]])

    def test_no_hit(self):
        from src.nct.workbench.catalog import brute_force_nct_search

        # Ext^1(S1, S1) is not zero and add(P1) alone misses S1
        self.assertEqual(brute_force_nct_search(self.dual_numbers_universe, 2), [])

    def test_semisimple(self):
        from src.nct.workbench.catalog import brute_force_nct_search

        hits = brute_force_nct_search(self.semisimple_universe, 3)
        self.assertEqual([h.labels for h in hits], [["S1", "S2"]])

    def test_needs_a_complete_universe(self):
        from src.nct.workbench.catalog import brute_force_nct_search
        from src.nct.workbench.checks import Universe

        declared = Universe.declared(self.a3, list(self.a3_universe))
        with self.assertRaises(ValueError):
            brute_force_nct_search(declared, 2)


if __name__ == '__main__':
    unittest.main()
