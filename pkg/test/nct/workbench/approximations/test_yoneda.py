import unittest

from ..BaseTest import BaseTestCase


class YonedaTestCase(BaseTestCase):
    def two_exact(self):
        from src.nct.workbench.approximations import n_kernel_in
        from src.nct.workbench.modules import hom_basis

        cover = hom_basis(self.a3_module("P1"), self.a3_module("S1"))[0]
        return n_kernel_in(self.a3_cluster_tilting(), cover, 2)

    def test_class_of_a_nonsplit_sequence(self):
        from src.nct.workbench.approximations import class_coordinates

        self.assertEqual(class_coordinates(self.two_exact()).to_list(), [[1]])

    def test_class_of_the_split_sequence(self):
        from src.nct.workbench.approximations import NSequence, class_coordinates

        split = NSequence.split(2, self.a3_module("S3"), self.a3_module("S1"))
        self.assertEqual(class_coordinates(split).to_list(), [[0]])

    def test_representative_of_a_class(self):
        from src.nct.workbench.approximations import class_coordinates, ext_class_representative, is_n_exact
        from src.nct.workbench.homology import ext_group
        from src.nct.workbench.shared import Verdict

        M = self.a3_cluster_tilting()
        S1, S3 = self.a3_module("S1"), self.a3_module("S3")
        group = ext_group(S1, S3, 2)
        s = ext_class_representative(M, S1, S3, 2, group.representative([1]))
        self.assertIs(s.right, S1)
        self.assertIs(s.left, S3)
        self.assertEqual(class_coordinates(s).to_list(), [[1]])
        self.assertEqual(is_n_exact(M, s).verdict, Verdict.PASS)

    def test_zero_class_gives_the_split_sequence(self):
        from src.nct.workbench.approximations import ext_class_representative, is_contractible
        from src.nct.workbench.homology import ext_group
        from src.nct.workbench.shared import Verdict

        S1, S3 = self.a3_module("S1"), self.a3_module("S3")
        group = ext_group(S1, S3, 2)
        s = ext_class_representative(self.a3_cluster_tilting(), S1, S3, 2, group.representative([0]))
        self.assertEqual(is_contractible(s).verdict, Verdict.PASS)


class RadicalTestCase(BaseTestCase):
    def test_radical_maps(self):
        from src.nct.workbench.approximations import is_in_radical, radical_witness
        from src.nct.workbench.modules import hom_basis, identity_map

        P1 = self.a3_module("P1")
        cover = hom_basis(P1, self.a3_module("S1"))[0]
        self.assertTrue(is_in_radical(cover))
        self.assertIsNone(radical_witness(cover))
        self.assertFalse(is_in_radical(identity_map(P1)))
        inclusion, projection = radical_witness(identity_map(P1))
        self.assertTrue((projection @ inclusion).is_isomorphism())

    def test_radical_respects_the_cap(self):
        from src.nct.workbench.approximations import is_in_radical
        from src.nct.workbench.modules import identity_map

        P = self.dual_numbers_universe.lookup("P1")
        self.assertIsNone(is_in_radical(identity_map(P), cap=2))

    def test_almost_minimalize(self):
        from src.nct.workbench.approximations import (
            NSequence,
            almost_minimalize,
            class_coordinates,
            direct_sum_sequences,
            is_almost_minimal,
            n_kernel_in,
        )
        from src.nct.workbench.modules import hom_basis

        cover = hom_basis(self.a3_module("P1"), self.a3_module("S1"))[0]
        s = n_kernel_in(self.a3_cluster_tilting(), cover, 2)
        self.assertTrue(is_almost_minimal(s))
        padded = direct_sum_sequences([s, NSequence.contractible(2, self.a3_module("P1"), 2)])
        self.assertFalse(is_almost_minimal(padded))
        trimmed = almost_minimalize(padded)
        self.assertTrue(is_almost_minimal(trimmed))
        self.assertIs(trimmed.left, padded.left)
        self.assertIs(trimmed.right, padded.right)
        self.assertEqual([m.dim_vector for m in trimmed.modules], [m.dim_vector for m in s.modules])
        self.assertEqual(class_coordinates(trimmed).to_list(), [[1]])


if __name__ == '__main__':
    unittest.main()
