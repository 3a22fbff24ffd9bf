import itertools
import unittest

from ..BaseTest import BaseTestCase


class ExtTestCase(BaseTestCase):
    def test_a3_ext_dims(self):
        from src.nct.workbench.homology import ext_dim

        S1, S2, S3 = (self.a3_module(n) for n in ("S1", "S2", "S3"))
        self.assertEqual(ext_dim(S1, S2, 1), 1)
        self.assertEqual(ext_dim(S2, S3, 1), 1)
        self.assertEqual(ext_dim(S1, S3, 2), 1)
        self.assertEqual(ext_dim(S1, S3, 1), 0)
        self.assertEqual(ext_dim(S1, S2, 2), 0)
        self.assertEqual(ext_dim(S1, S3, 3), 0)

    def test_degree_zero_is_hom(self):
        from src.nct.workbench.homology import ext_dim
        from src.nct.workbench.modules import hom_dim

        for M, N in itertools.product(self.a3_universe, repeat=2):
            self.assertEqual(ext_dim(M, N, 0), hom_dim(M, N))

    def test_projectives_and_injectives_are_acyclic(self):
        from src.nct.workbench.algebra import injective_modules, projective_modules
        from src.nct.workbench.homology import ext_dim

        for k in (1, 2):
            for P in projective_modules(self.a3):
                for N in self.a3_universe:
                    self.assertEqual(ext_dim(P, N, k), 0)
            for I in injective_modules(self.a3):
                for M in self.a3_universe:
                    self.assertEqual(ext_dim(M, I, k), 0)

    def test_balance_on_small_universes(self):
        from src.nct.workbench.homology import ext_dim, ext_dim_by_coresolution

        for universe in (self.a3_universe, self.dual_numbers_universe):
            for M, N in itertools.product(universe, repeat=2):
                for k in range(5):
                    with self.subTest(M=M.label, N=N.label, k=k):
                        self.assertEqual(ext_dim(M, N, k), ext_dim_by_coresolution(M, N, k))

    def test_both_resolutions_agree(self):
        from src.nct.workbench.catalog import NakayamaSpec, nakayama_universe
        from src.nct.workbench.homology import ext_dim, ext_dim_by_coresolution

        _, universe = nakayama_universe(NakayamaSpec(4, 3, 2))
        for M, N in itertools.product(universe, repeat=2):
            for k in range(4):
                with self.subTest(M=M.label, N=N.label, k=k):
                    self.assertEqual(ext_dim(M, N, k), ext_dim_by_coresolution(M, N, k))

    def test_dual_numbers(self):
        from src.nct.workbench.homology import ext_dim, ext_dim_by_coresolution

        S = self.dual_numbers_universe.lookup("S1")
        for k in range(7):
            with self.subTest(k=k):
                self.assertEqual(ext_dim(S, S, k), 1)
                self.assertEqual(ext_dim_by_coresolution(S, S, k), 1)

    def test_semisimple(self):
        from src.nct.workbench.homology import ext_dim

        for M, N in itertools.product(self.semisimple_universe, repeat=2):
            self.assertEqual(ext_dim(M, N, 1), 0)
            self.assertEqual(ext_dim(M, N, 2), 0)

    def test_bad_arguments(self):
        from src.nct.workbench.homology import ext_dim, ext_group

        S1 = self.a3_module("S1")
        with self.assertRaises(ValueError):
            ext_dim(S1, S1, -1)
        with self.assertRaises(ValueError):
            ext_group(S1, S1, -1)
        with self.assertRaises(ValueError):
            ext_dim(S1, self.dual_numbers_universe.lookup("S1"), 1)


class ExtGroupTestCase(BaseTestCase):
    def test_classes(self):
        from src.nct.workbench.homology import ext_group
        from src.nct.workbench.linalg import Mat

        group = ext_group(self.a3_module("S1"), self.a3_module("S2"), 1)
        self.assertEqual(group.dim, 1)
        self.assertEqual(group.tops, (1,))
        cocycle = group.representative([1])
        self.assertFalse(group.is_zero_class(cocycle))
        self.assertEqual(group.coordinates(cocycle).to_list(), [[1]])
        self.assertTrue(group.is_zero_class(Mat.zeros(self.a3.field, group.cochain_dim, 1)))
        f = group.cocycle_map(cocycle)
        self.assertIs(f.target, self.a3_module("S2"))
        self.assertFalse(f.is_zero())


class InducedMapsTestCase(BaseTestCase):
    def test_degree_zero_induced_map(self):
        from src.nct.workbench.homology import ext_induced_map
        from src.nct.workbench.modules import hom_basis

        P1 = self.a3_module("P1")
        (cover,) = hom_basis(P1, self.a3_module("S1"))
        self.assertEqual(ext_induced_map(P1, cover, 0).to_list(), [[1]])

    def test_ladders(self):
        from src.nct.workbench.homology import ext_ladder, is_ext_orthogonal
        from src.nct.workbench.modules import hom_basis

        S1, P1, S2 = self.a3_module("S1"), self.a3_module("P1"), self.a3_module("S2")
        (iota,) = hom_basis(S2, P1)
        (cover,) = hom_basis(P1, S1)
        ladder = ext_ladder(S1, [iota, cover], 1)
        self.assertEqual(ladder.dims, (1, 0, 0))
        self.assertFalse(ladder.is_exact())
        self.assertIsNotNone(ladder.failure())
        self.assertTrue(ext_ladder(self.a3_module("S3"), [iota, cover], 1).is_exact())
        with self.assertRaises(ValueError):
            ext_ladder(S1, [], 1)
        self.assertTrue(is_ext_orthogonal(P1, S2, [1, 2]))
        self.assertFalse(is_ext_orthogonal(S1, S2, [1]))


if __name__ == '__main__':
    unittest.main()
