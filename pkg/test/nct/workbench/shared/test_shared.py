import os
import tempfile
import unittest
from unittest.mock import patch


class EnumerationTestCase(unittest.TestCase):
    def test_enumerate_vectors(self):
        from src.nct.workbench.shared import enumerate_vectors, enumeration_size

        self.assertEqual(list(enumerate_vectors(2, 2)), [(0, 0), (0, 1), (1, 0), (1, 1)])
        self.assertEqual(list(enumerate_vectors(5, 0)), [()])
        self.assertEqual(enumeration_size(3, 4), 81)

    def test_cap(self):
        from src.nct.workbench.shared import EnumerationTooLargeError, enumerate_vectors

        with self.assertRaises(EnumerationTooLargeError) as context:
            list(enumerate_vectors(3, 3, cap=26, what="Hom(S1, P1)"))
        self.assertEqual((context.exception.size, context.exception.cap), (27, 26))
        self.assertIn("Hom(S1, P1)", str(context.exception))

    def test_projective_points(self):
        from src.nct.workbench.shared import projective_points

        self.assertEqual(list(projective_points(3, 2)), [(0, 1), (1, 0), (1, 1), (1, 2)])
        self.assertEqual(list(projective_points(2, 0)), [])
        self.assertEqual(len(list(projective_points(5, 3))), (5 ** 3 - 1) // 4)

    def test_cap_from_environment(self):
        from src.nct.workbench.shared import ENUMERATION_CAP_VARIABLE
        from src.nct.workbench.shared.shared import _cap_from_environment

        with patch.dict(os.environ, {ENUMERATION_CAP_VARIABLE: "100"}):
            self.assertEqual(_cap_from_environment(), 100)
        for raw in ("lots", "0"):
            with patch.dict(os.environ, {ENUMERATION_CAP_VARIABLE: raw}):
                with self.assertRaises(ValueError):
                    _cap_from_environment()
        with patch.dict(os.environ, {}, clear=True):
            self.assertEqual(_cap_from_environment(), 2 ** 16)

    def test_seeded_rng(self):
        from src.nct.workbench.shared import seeded_rng

        first = seeded_rng(7, 1).integers(0, 1000, 5)
        self.assertEqual(list(first), list(seeded_rng(7, 1).integers(0, 1000, 5)))
        self.assertNotEqual(list(first), list(seeded_rng(7, 2).integers(0, 1000, 5)))


class CacheTestCase(unittest.TestCase):
    def test_module_keyed_caches_are_bounded(self):
        from src.nct.workbench.checks import scalars
        from src.nct.workbench.homology import ext, resolutions
        from src.nct.workbench.modules import hom
        from src.nct.workbench.shared import CACHE_SIZE

        for cached in (hom._hom_system, hom.hom_basis, hom._hom_basis_matrix,
                       resolutions._cover_step, resolutions._envelope_step,
                       resolutions.min_projective_resolution, resolutions.min_injective_coresolution,
                       ext.cochain_differential, ext.ext_group, scalars._inflate):
            with self.subTest(cached=cached.__name__):
                self.assertEqual(cached.cache_info().maxsize, CACHE_SIZE)

    def test_eviction_keeps_results(self):
        from src.nct.workbench.catalog import NakayamaSpec, nakayama_universe
        from src.nct.workbench.homology import ext_dim, ext_group

        _, universe = nakayama_universe(NakayamaSpec(3, 2, 2))
        S1, S3 = universe.lookup("S1"), universe.lookup("S3")
        before = ext_dim(S1, S3, 2)
        ext_group.cache_clear()
        self.assertEqual(ext_group(S1, S3, 2).dim, before)
        self.assertEqual(before, 1)


class InputTestCase(unittest.TestCase):
    def test_input_error(self):
        from src.nct.workbench.shared import InputError, WorkbenchError

        e = InputError("expected an integer", "module.json", "$.dim_vector[0]")
        self.assertEqual(str(e), "module.json:$.dim_vector[0]: expected an integer")
        self.assertEqual((e.source, e.location), ("module.json", "$.dim_vector[0]"))
        self.assertEqual(str(InputError("bad")), "<input>: bad")
        self.assertIsInstance(e, WorkbenchError)

    def test_require_integer(self):
        from src.nct.workbench.shared import InputError, require_integer

        self.assertEqual(require_integer(4, "f", "$"), 4)
        for value in (True, 1.0, "1", None):
            with self.subTest(value=value):
                with self.assertRaises(InputError):
                    require_integer(value, "f", "$.n")

    def test_read_json(self):
        from src.nct.workbench.shared import InputError, read_json

        with tempfile.TemporaryDirectory() as directory:
            good = os.path.join(directory, "good.json")
            with open(good, "w") as f:
                f.write('{"n": 2}')
            self.assertEqual(read_json(good), {"n": 2})
            bad = os.path.join(directory, "bad.json")
            with open(bad, "w") as f:
                f.write('{"n": ')
            with self.assertRaises(InputError) as context:
                read_json(bad)
            self.assertEqual(context.exception.location, "line 1 column 7")
            with self.assertRaises(InputError):
                read_json(os.path.join(directory, "missing.json"))


if __name__ == '__main__':
    unittest.main()
