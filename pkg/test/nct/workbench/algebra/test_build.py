import unittest

from ..BaseTest import BaseTestCase


def a3_quiver():
    from src.nct.workbench.algebra import Quiver

    return Quiver.from_edges(3, [("a", 0, 1), ("b", 1, 2)])


def commutative_square():
    from src.nct.workbench.algebra import Quiver, Relation, build_algebra

    quiver = Quiver.from_edges(4, [("a", 0, 1), ("b", 1, 3), ("c", 0, 2), ("d", 2, 3)])
    relation = Relation(((1, quiver.path(["a", "b"])), (-1, quiver.path(["c", "d"]))))
    return build_algebra(quiver, [relation], 3, 3, name="square")


class QuiverTestCase(BaseTestCase):
    def test_rejects_bad_arrows(self):
        from src.nct.workbench.algebra import Quiver

        with self.assertRaises(ValueError):
            Quiver.from_edges(2, [("a", 0, 1), ("a", 1, 0)])
        with self.assertRaises(ValueError):
            Quiver.from_edges(2, [("a", 0, 2)])
        with self.assertRaises(ValueError):
            Quiver(0)

    def test_paths(self):
        quiver = a3_quiver()
        path = quiver.path(["a", "b"])
        self.assertEqual((path.source, path.target, path.length), (0, 2, 2))
        self.assertEqual(len(list(quiver.paths_up_to(2))), 6)
        with self.assertRaises(ValueError):
            quiver.path(["b", "a"])
        with self.assertRaises(ValueError):
            quiver.path(["z"])

    def test_opposite(self):
        opposite = a3_quiver().opposite()
        self.assertEqual([(a.source, a.target) for a in opposite.arrows], [(1, 0), (2, 1)])


class RelationTestCase(BaseTestCase):
    def test_short_terms_are_not_admissible(self):
        from src.nct.workbench.algebra import Relation
        from src.nct.workbench.shared import NotAdmissibleError

        quiver = a3_quiver()
        with self.assertRaises(NotAdmissibleError):
            Relation.monomial(quiver.path(["a"]))

    def test_terms_must_be_parallel(self):
        from src.nct.workbench.algebra import Quiver, Relation

        quiver = Quiver.from_edges(3, [("a", 0, 1), ("b", 1, 2), ("c", 1, 1)])
        with self.assertRaises(ValueError):
            Relation(((1, quiver.path(["a", "b"])), (1, quiver.path(["a", "c"]))))


class BuildAlgebraTestCase(BaseTestCase):
    def test_a3_radical_square_zero(self):
        from src.nct.workbench.algebra import Relation, build_algebra

        quiver = a3_quiver()
        algebra = build_algebra(quiver, [Relation.monomial(quiver.path(["a", "b"]))], 2, 2)
        self.assertEqual(algebra.dimension, 5)
        self.assertFalse(algebra.reduce(quiver.path(["a", "b"])).any())
        self.assertEqual(self.a3.dimension, 5)

    def test_path_algebra_without_relations(self):
        from src.nct.workbench.algebra import build_algebra

        algebra = build_algebra(a3_quiver(), [], 3, 5)
        self.assertEqual(algebra.dimension, 6)
        self.assertEqual(algebra.p, 5)

    def test_missing_relation_is_not_admissible(self):
        from src.nct.workbench.algebra import build_algebra
        from src.nct.workbench.shared import NotAdmissibleError

        with self.assertRaises(NotAdmissibleError):
            build_algebra(a3_quiver(), [], 2, 2)
        with self.assertRaises(NotAdmissibleError):
            build_algebra(a3_quiver(), [], 1, 2)

    def test_commutativity_relation(self):
        algebra = commutative_square()
        self.assertEqual(algebra.dimension, 9)
        quiver = algebra.quiver
        ab = algebra.reduce(quiver.path(["a", "b"]))
        cd = algebra.reduce(quiver.path(["c", "d"]))
        self.assertEqual(ab.tolist(), cd.tolist())
        self.assertTrue(ab.any())

    def test_projectives_and_injectives(self):
        from src.nct.workbench.algebra import injective_modules, projective_modules, regular_module

        projectives = projective_modules(self.a3)
        self.assertEqual([P.dim_vector for P in projectives], [(1, 1, 0), (0, 1, 1), (0, 0, 1)])
        self.assertEqual([P.name for P in projectives], ["P1", "P2", "P3"])
        injectives = injective_modules(self.a3)
        self.assertEqual([I.dim_vector for I in injectives], [(1, 0, 0), (1, 1, 0), (0, 1, 1)])
        self.assertEqual(regular_module(self.a3).dimension, self.a3.dimension)

    def test_projectives_of_commutative_square(self):
        from src.nct.workbench.algebra import projective_modules

        P1 = projective_modules(commutative_square())[0]
        self.assertEqual(P1.dim_vector, (1, 1, 1, 1))

    def test_opposite_is_cached(self):
        from src.nct.workbench.algebra import opposite_algebra

        opposite = opposite_algebra(self.a3)
        self.assertIs(opposite_algebra(opposite), self.a3)
        self.assertEqual(opposite.dimension, self.a3.dimension)

    def test_quotient(self):
        from src.nct.workbench.algebra import Relation, build_algebra, identity_quotient, quotient_algebra

        quiver = a3_quiver()
        algebra = build_algebra(quiver, [], 3, 2)
        q = quotient_algebra(algebra, [Relation.monomial(quiver.path(["a", "b"]))], name="A3/rad^2")
        self.assertIs(q.source, algebra)
        self.assertEqual(q.target.dimension, 5)
        self.assertIs(identity_quotient(algebra).target, algebra)


if __name__ == '__main__':
    unittest.main()
