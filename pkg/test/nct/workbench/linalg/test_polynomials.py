import unittest

from hypothesis import given, settings, strategies as st

from src.nct.workbench.linalg import Mat, PrimeField, charpoly, evaluate, factor_mod_p, poly_power


class PolynomialsTestCase(unittest.TestCase):
    def test_charpoly_of_identity(self):
        self.assertEqual(charpoly(Mat.identity(PrimeField(3), 2)), [1, 1, 1])
        self.assertEqual(charpoly(Mat.zeros(PrimeField(3), 0, 0)), [1])
        with self.assertRaises(ValueError):
            charpoly(Mat.zeros(PrimeField(3), 1, 2))

    def test_factoring(self):
        self.assertEqual(factor_mod_p([1, 0, 1], 2), [([1, 1], 2)])
        self.assertEqual(factor_mod_p([1, 0, 1], 3), [([1, 0, 1], 1)])
        self.assertEqual(factor_mod_p([1], 5), [])

    def test_poly_power(self):
        # (x + 1)^2 = x^2 + 1 over GF(2)
        self.assertEqual(poly_power([1, 1], 2, 2), [1, 0, 1])

    @given(st.sampled_from([2, 3, 5]), st.integers(1, 4), st.data())
    @settings(max_examples=40, deadline=None)
    def test_cayley_hamilton(self, p, n, data):
        entries = data.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n),
                                     min_size=n, max_size=n))
        A = Mat(PrimeField(p), entries)
        self.assertTrue(evaluate(charpoly(A), A).is_zero())


if __name__ == '__main__':
    unittest.main()
