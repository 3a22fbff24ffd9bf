import unittest

import numpy as np

from src.nct.workbench.linalg import Mat, PrimeField, block_diag, hstack, mulmod, vstack


class MatTestCase(unittest.TestCase):
    def test_entries_are_reduced(self):
        field = PrimeField(5)
        A = Mat(field, [[7, -1], [10, 3]])
        self.assertEqual(A.to_list(), [[2, 4], [0, 3]])
        self.assertEqual((A * 2).to_list(), [[4, 3], [0, 1]])
        self.assertEqual((-A).to_list(), [[3, 1], [0, 2]])

    def test_matrices_are_read_only(self):
        A = Mat(PrimeField(2), [[1, 0]])
        with self.assertRaises(ValueError):
            A.array[0, 0] = 0

    def test_fields_must_agree(self):
        with self.assertRaises(ValueError):
            Mat.identity(PrimeField(2), 2) @ Mat.identity(PrimeField(3), 2)

    def test_equality_and_hash(self):
        field = PrimeField(3)
        self.assertEqual(Mat(field, [[1, 2]]), Mat(field, [[4, 5]]))
        self.assertEqual(hash(Mat(field, [[1, 2]])), hash(Mat(field, [[4, 5]])))
        self.assertNotEqual(Mat(field, [[1, 2]]), Mat(PrimeField(5), [[1, 2]]))

    def test_from_rows(self):
        field = PrimeField(2)
        self.assertEqual(Mat.from_rows(field, [], cols=3).shape, (0, 3))
        with self.assertRaises(ValueError):
            Mat.from_rows(field, [[1], [1, 0]])
        with self.assertRaises(ValueError):
            Mat(field, [1, 0])

    def test_power(self):
        field = PrimeField(2)
        nilpotent = Mat(field, [[0, 1], [0, 0]])
        self.assertTrue(nilpotent.power(2).is_zero())
        self.assertEqual(nilpotent.power(0), Mat.identity(field, 2))

    def test_stacking(self):
        field = PrimeField(3)
        a, b = Mat(field, [[1], [2]]), Mat(field, [[0], [1]])
        self.assertEqual(hstack(field, [a, b]).to_list(), [[1, 0], [2, 1]])
        self.assertEqual(vstack(field, [a, b]).shape, (4, 1))
        self.assertEqual(hstack(field, [], 3).shape, (3, 0))
        self.assertEqual(block_diag(field, [a, Mat.identity(field, 1)]).to_list(), [[1, 0], [2, 0], [0, 1]])

    def test_mulmod_does_not_overflow(self):
        p = 2 ** 31 - 1
        a = np.full((2, 7), p - 1, dtype=np.int64)
        b = np.full((7, 3), p - 2, dtype=np.int64)
        expected = (7 * (p - 1) * (p - 2)) % p
        self.assertTrue((mulmod(a, b, p) == expected).all())


if __name__ == '__main__':
    unittest.main()
