import unittest

from ..BaseTest import BaseTestCase


class ResolutionTestCase(BaseTestCase):
    def test_projective_resolution_of_top_simple(self):
        from src.nct.workbench.homology import min_projective_resolution

        resolution = min_projective_resolution(self.a3_module("S1"), 4)
        self.assertEqual(resolution.length, 2)
        self.assertEqual([resolution.tops_at(i) for i in range(4)], [(0,), (1,), (2,), ()])
        self.assertEqual([t.dim_vector for t in resolution.terms], [(1, 1, 0), (0, 1, 1), (0, 0, 1)])
        self.assertTrue(resolution.is_exact())
        self.assertTrue(resolution.is_minimal())
        self.assertEqual(len(resolution.differentials), 2)
        self.assertTrue(resolution.syzygy(3).is_zero())
        self.assertTrue(resolution.term(4).is_zero())
        with self.assertRaises(ValueError):
            resolution.term(5)

    def test_syzygies(self):
        from src.nct.workbench.homology import syzygy
        from src.nct.workbench.modules import is_isomorphic

        S1, S2, S3 = (self.a3_module(n) for n in ("S1", "S2", "S3"))
        self.assertIsNotNone(is_isomorphic(syzygy(S1, 1), S2))
        self.assertIsNotNone(is_isomorphic(syzygy(S2, 1), S3))
        self.assertTrue(syzygy(S3, 1).is_zero())
        self.assertIs(syzygy(S1, 0), S1)

    def test_injective_coresolution(self):
        from src.nct.workbench.homology import cosyzygy, min_injective_coresolution
        from src.nct.workbench.modules import is_isomorphic

        S3 = self.a3_module("S3")
        coresolution = min_injective_coresolution(S3, 3)
        self.assertEqual([t.dim_vector for t in coresolution.terms], [(0, 1, 1), (1, 1, 0), (1, 0, 0)])
        self.assertTrue(coresolution.is_exact())
        self.assertTrue(coresolution.is_minimal())
        self.assertIsNotNone(is_isomorphic(cosyzygy(S3, 1), self.a3_module("S2")))
        self.assertTrue(cosyzygy(self.a3_module("S1"), 1).is_zero())

    def test_covers_and_envelopes(self):
        from src.nct.workbench.homology import injective_envelope, projective_cover
        from src.nct.workbench.modules import is_isomorphic

        cover = projective_cover(self.a3_module("S1"))
        self.assertTrue(cover.is_surjective())
        self.assertIsNotNone(is_isomorphic(cover.source, self.a3_module("P1")))
        envelope = injective_envelope(self.a3_module("S2"))
        self.assertTrue(envelope.is_injective())
        self.assertIsNotNone(is_isomorphic(envelope.target, self.a3_module("P1")))

    def test_periodic_resolution(self):
        from src.nct.workbench.homology import min_projective_resolution
        from src.nct.workbench.modules import is_isomorphic

        S = self.dual_numbers_universe.lookup("S1")
        resolution = min_projective_resolution(S, 3)
        self.assertEqual(resolution.length, 3)
        self.assertTrue(resolution.is_exact())
        self.assertTrue(resolution.is_minimal())
        self.assertIsNotNone(is_isomorphic(resolution.syzygy(1), S))

    def test_zero_module(self):
        from src.nct.workbench.homology import min_projective_resolution
        from src.nct.workbench.modules import Module

        resolution = min_projective_resolution(Module.zero(self.a3), 2)
        self.assertEqual(resolution.length, -1)
        self.assertTrue(resolution.is_exact())
        with self.assertRaises(ValueError):
            min_projective_resolution(self.a3_module("S1"), -1)


if __name__ == '__main__':
    unittest.main()
