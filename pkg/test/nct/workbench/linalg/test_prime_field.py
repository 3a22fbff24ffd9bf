import unittest

from src.nct.workbench.linalg import PrimeField


class PrimeFieldTestCase(unittest.TestCase):
    def test_rejects_non_primes(self):
        for bad in (0, 1, 4, 2 ** 31):
            with self.assertRaises(ValueError):
                PrimeField(bad)
        with self.assertRaises(TypeError):
            PrimeField(True)

    def test_arithmetic(self):
        field = PrimeField(7)
        self.assertEqual(field.inverse(3), 5)
        self.assertEqual(field.negate(2), 5)
        self.assertEqual(field.reduce(-1), 6)
        self.assertEqual(list(field.elements()), list(range(7)))
        self.assertEqual(str(field), "GF(7)")
        with self.assertRaises(ZeroDivisionError):
            field.inverse(14)


if __name__ == '__main__':
    unittest.main()
