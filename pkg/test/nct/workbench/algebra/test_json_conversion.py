import json
import os
import tempfile
import unittest

from ..BaseTest import BaseTestCase

A3 = {
    "p": 2,
    "L": 2,
    "vertices": 3,
    "arrows": [["a", 0, 1], ["b", 1, 2]],
    "relations": [[[1, ["a", "b"]]]],
}


class AlgebraJsonTestCase(BaseTestCase):
    def test_load_a3(self):
        from src.nct.workbench.algebra import algebra_from_dict, algebra_to_dict

        algebra = algebra_from_dict(A3)
        self.assertEqual(algebra.dimension, 5)
        self.assertEqual(algebra_to_dict(algebra), A3)

    def test_errors_point_at_the_offending_value(self):
        from src.nct.workbench.algebra import algebra_from_dict
        from src.nct.workbench.shared import InputError

        cases = [
            ({**A3, "p": 4}, "$"),
            ({**A3, "L": "two"}, "$.L"),
            ({**A3, "arrows": [["a", 0]]}, "$.arrows[0]"),
            ({**A3, "arrows": [["a", 0, 1], ["a", 1, 2]]}, "$.arrows"),
            ({**A3, "relations": [[[1, ["b", "a"]]]]}, "$.relations[0][0][1]"),
            ({**A3, "relations": [[[1, ["a"]]]]}, "$.relations[0]"),
            ({**A3, "relations": []}, "$"),
        ]
        for data, location in cases:
            with self.subTest(location=location):
                with self.assertRaises(InputError) as context:
                    algebra_from_dict(data, "a3.json")
                self.assertEqual(context.exception.location, location)
                self.assertTrue(str(context.exception).startswith(f"a3.json:{location}: "))

    def test_missing_key(self):
        from src.nct.workbench.algebra import algebra_from_dict
        from src.nct.workbench.shared import InputError

        data = dict(A3)
        del data["L"]
        with self.assertRaises(InputError):
            algebra_from_dict(data)
        with self.assertRaises(InputError):
            algebra_from_dict([])

    def test_load_from_file(self):
        from src.nct.workbench.algebra import load_algebra
        from src.nct.workbench.shared import InputError

        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "a3.json")
            with open(path, "w") as f:
                json.dump(A3, f)
            self.assertEqual(load_algebra(path).dimension, 5)

            broken = os.path.join(directory, "broken.json")
            with open(broken, "w") as f:
                f.write("{\"p\": 2,")
            with self.assertRaises(InputError):
                load_algebra(broken)
            with self.assertRaises(InputError):
                load_algebra(os.path.join(directory, "missing.json"))


if __name__ == '__main__':
    unittest.main()
