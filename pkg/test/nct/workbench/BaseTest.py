import itertools
import unittest

import numpy as np

# (m, l, n) -> (universe, cluster tilting subcategory), found once per run
_CERTIFIED = {}


def brute_force_hom_dim(M, N) -> int:
    """dim Hom(M, N) over GF(p) by enumerating every tuple of vertex matrices

    Only meant for the tiny modules of the catalog.
    """
    p = M.field.p
    shapes = [(N.dim_vector[v], M.dim_vector[v]) for v in range(M.algebra.vertex_count)]
    size = sum(r * c for r, c in shapes)
    count = 0
    for entries in itertools.product(range(p), repeat=size):
        mats, offset = [], 0
        for r, c in shapes:
            mats.append(np.array(entries[offset:offset + r * c], dtype=np.int64).reshape(r, c))
            offset += r * c
        if all(((N.arrow_mats[k].array @ mats[a.source] - mats[a.target] @ M.arrow_mats[k].array) % p == 0).all()
               for k, a in enumerate(M.algebra.quiver.arrows)):
            count += 1
    dim = 0
    while p ** dim < count:
        dim += 1
    return dim


class BaseTestCase(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        from src.nct.workbench.catalog import (
            NakayamaSpec,
            cyclic_nakayama_universe,
            nakayama_universe,
            semisimple_universe,
        )

        # A3/rad^2 over GF(2): S1, P1, S2, P2, S3 with P3 = S3, I2 = P1, I3 = P2
        cls.a3, cls.a3_universe = nakayama_universe(NakayamaSpec(3, 2, 2))
        # k[x]/(x^2) over GF(2): S1 and P1
        cls.dual_numbers, cls.dual_numbers_universe = cyclic_nakayama_universe(1, 2, 2)
        cls.semisimple, cls.semisimple_universe = semisimple_universe(2, 2)

    @classmethod
    def a3_module(cls, name: str):
        return cls.a3_universe.lookup(name)

    @classmethod
    def a3_subcat(cls, *names: str, name: str = None):
        return cls.a3_universe.subcat(list(names), name=name)

    @classmethod
    def a3_cluster_tilting(cls):
        """add(S1 ⊕ S3 ⊕ P1 ⊕ P2), the 2-cluster tilting subcategory of A3/rad^2"""
        return cls.a3_subcat("S1", "S3", "P1", "P2", name="M")

    @classmethod
    def certified_pair(cls, m: int, l: int, n: int = 2):
        """The universe of A_m/rad^l over GF(2) with its n-cluster tilting subcategory

        The candidates containing every projective and injective are searched
        and the smallest hit is kept.
        """
        key = (m, l, n)
        if key not in _CERTIFIED:
            from src.nct.workbench.algebra import injective_modules, projective_modules
            from src.nct.workbench.catalog import NakayamaSpec, nakayama_universe
            from src.nct.workbench.checks import is_n_cluster_tilting
            from src.nct.workbench.modules import Subcat
            from src.nct.workbench.shared import Verdict

            algebra, universe = nakayama_universe(NakayamaSpec(m, l, 2))
            required = {universe.index_of(P) for P in projective_modules(algebra) + injective_modules(algebra)}
            optional = [k for k in range(len(universe)) if k not in required]
            candidates = (Subcat([universe[k] for k in sorted(required.union(extra))], name="M")
                          for r in range(len(optional) + 1) for extra in itertools.combinations(optional, r))
            M = next((c for c in candidates if is_n_cluster_tilting(universe, c, n).verdict is Verdict.PASS), None)
            if M is None:
                raise AssertionError(f"A_{m}/rad^{l} has no {n}-cluster tilting subcategory")
            _CERTIFIED[key] = universe, M
        return _CERTIFIED[key]


if __name__ == '__main__':
    unittest.main()
