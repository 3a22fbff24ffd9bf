from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..linalg import Mat, PrimeField, rref
from ..shared import NotAdmissibleError
from .Algebra import Algebra, Relation
from .Quiver import Path, Quiver

logger = logging.getLogger(__name__)


def _column_order(path: Path) -> tuple:
    # longest paths first, so pivots land on long paths and the basis is short
    return -path.length, path.source, path.arrows


def build_algebra(
        quiver: Quiver,
        relations: Sequence[Relation],
        L: int,
        p: int | PrimeField,
        name: str | None = None,
) -> Algebra:
    """Build kQ/I for the ideal I generated by relations, assuming rad^L ⊆ I

    The ideal is spanned, inside the space of paths of length at most L, by
    the products u·r·v of relations with paths; paths longer than L are
    treated as zero. The path basis is the set of non-pivot columns after row
    reduction with longest paths ordered first.

    Args:
      quiver: Quiver: The quiver
      relations: Sequence[Relation]: Generators of the ideal
      L: int: The nilpotency bound, at least 2
      p: int | PrimeField: The prime
      name: str | None: (Default value = None)
        An optional display name

    Returns:
      Algebra: The algebra

    Raises:
      NotAdmissibleError: If L < 2, or some path of length L does not reduce to zero
    """
    field = p if isinstance(p, PrimeField) else PrimeField(int(p))
    if L < 2:
        raise NotAdmissibleError(f"nilpotency bound must be at least 2, got {L}")
    relations = tuple(relations)
    for relation in relations:
        for _, path in relation.terms:
            quiver.path([quiver.arrows[a].id for a in path.arrows])

    paths = sorted(quiver.paths_up_to(L), key=_column_order)
    column = {path: k for k, path in enumerate(paths)}
    ending_at = {v: [q for q in paths if q.target == v and q.length <= L - 2] for v in range(quiver.vertex_count)}
    starting_at = {v: [q for q in paths if q.source == v and q.length <= L - 2] for v in range(quiver.vertex_count)}

    rows = []
    for relation in relations:
        for before in ending_at[relation.source]:
            for after in starting_at[relation.target]:
                row = np.zeros(len(paths), dtype=np.int64)
                for coefficient, term in relation.terms:
                    full = before.then(term).then(after)
                    if full.length <= L:
                        row[column[full]] += coefficient
                if (row % field.p).any():
                    rows.append(row)
    logger.debug("ideal spanning set: %d rows over %d paths", len(rows), len(paths))

    if rows:
        reduced, _, pivots = rref(Mat(field, np.vstack(rows)))
        reduced = reduced.array
    else:
        reduced, pivots = np.zeros((0, len(paths)), dtype=np.int64), ()
    pivot_row = {c: i for i, c in enumerate(pivots)}
    free = [c for c in range(len(paths)) if c not in pivot_row]

    basis = sorted((paths[c] for c in free), key=lambda q: (q.length, q.source, q.target, q.arrows))
    basis_position = {q: k for k, q in enumerate(basis)}
    free_to_basis = [basis_position[paths[c]] for c in free]

    normal_forms = {}
    for c, path in enumerate(paths):
        vector = np.zeros(len(basis), dtype=np.int64)
        if c in pivot_row:
            row = reduced[pivot_row[c]]
            for f, b in zip(free, free_to_basis):
                vector[b] = (-row[f]) % field.p
        else:
            vector[basis_position[path]] = 1
        vector.flags.writeable = False
        normal_forms[path] = vector

    for path in paths:
        if path.length == L and normal_forms[path].any():
            raise NotAdmissibleError(
                f"path through arrows {[quiver.arrows[a].id for a in path.arrows]} of length {L} "
                f"does not reduce to zero: the relations do not contain rad^{L}")

    algebra = Algebra(quiver, relations, field, L, basis, normal_forms, name=name)
    logger.debug("built %r", algebra)
    return algebra


_opposites: dict[Algebra, Algebra] = {}


def opposite_algebra(algebra: Algebra) -> Algebra:
    """The opposite algebra: every arrow and every relation path reversed

    The result is cached in both directions, so the opposite of the opposite
    is the original object and dual modules land over the same algebra.
    """
    if algebra in _opposites:
        return _opposites[algebra]
    name = f"{algebra.name}^op" if algebra.name else None
    opposite = build_algebra(
        algebra.quiver.opposite(),
        [relation.reversed() for relation in algebra.relations],
        algebra.bound,
        algebra.field,
        name=name,
    )
    _opposites[algebra] = opposite
    _opposites[opposite] = algebra
    return opposite


@dataclass(frozen=True)
class QuotientMap:
    """The surjection Λ -> Λ' = Λ/(extra relations) on the same quiver

    Attributes:
      source: Algebra: Λ
      target: Algebra: Λ'
      extra: tuple[Relation, ...]: The added relations
    """
    source: Algebra
    target: Algebra
    extra: tuple[Relation, ...] = ()


def quotient_algebra(
        algebra: Algebra,
        extra: Sequence[Relation],
        name: str | None = None,
) -> QuotientMap:
    """The quotient of algebra by additional admissible relations

    Args:
      algebra: Algebra: Λ
      extra: Sequence[Relation]: Relations added to those of Λ
      name: str | None: (Default value = None)
        A display name for the quotient

    Returns:
      QuotientMap: The map Λ -> Λ'
    """
    target = build_algebra(algebra.quiver, algebra.relations + tuple(extra), algebra.bound, algebra.field,
                           name=name)
    return QuotientMap(algebra, target, tuple(extra))


def identity_quotient(algebra: Algebra) -> QuotientMap:
    return QuotientMap(algebra, algebra, ())


def _projective(algebra: Algebra, vertex: int):
    from ..modules.Module import Module

    field = algebra.field
    spaces = [algebra.basis_indices_between(vertex, j) for j in range(algebra.vertex_count)]
    mats = []
    for arrow_index, arrow in enumerate(algebra.quiver.arrows):
        source_paths = spaces[arrow.source]
        target_paths = spaces[arrow.target]
        mat = np.zeros((len(target_paths), len(source_paths)), dtype=np.int64)
        step = Path(arrow.source, arrow.target, (arrow_index,))
        for col, k in enumerate(source_paths):
            image = algebra.reduce(algebra.path_basis[k].then(step))
            mat[:, col] = image[target_paths]
        mats.append(Mat(field, mat))
    return Module(algebra, [len(s) for s in spaces], mats, name=f"P{vertex + 1}")


def _injective(algebra: Algebra, vertex: int):
    from ..modules.Module import Module

    field = algebra.field
    spaces = [algebra.basis_indices_between(j, vertex) for j in range(algebra.vertex_count)]
    mats = []
    for arrow_index, arrow in enumerate(algebra.quiver.arrows):
        # a functional on paths source->vertex goes to one on paths target->vertex
        source_paths = spaces[arrow.source]
        target_paths = spaces[arrow.target]
        mat = np.zeros((len(target_paths), len(source_paths)), dtype=np.int64)
        step = Path(arrow.source, arrow.target, (arrow_index,))
        for row, k in enumerate(target_paths):
            image = algebra.reduce(step.then(algebra.path_basis[k]))
            mat[row, :] = image[source_paths]
        mats.append(Mat(field, mat))
    return Module(algebra, [len(s) for s in spaces], mats, name=f"I{vertex + 1}")


@lru_cache(maxsize=None)
def projective_modules(algebra: Algebra) -> tuple:
    """The indecomposable projectives P_i = e_i Λ, one per vertex

    P_i has at vertex j the basis paths from i to j, and an arrow acts by
    composing it after the path. Each module is checked against the relations
    on construction.

    Args:
      algebra: Algebra: The algebra

    Returns:
      tuple[Module, ...]: P_1, ..., P_n named "P1".."Pn"
    """
    return tuple(_projective(algebra, v) for v in range(algebra.vertex_count))


@lru_cache(maxsize=None)
def injective_modules(algebra: Algebra) -> tuple:
    """The indecomposable injectives I_i = D(Λ e_i), one per vertex

    I_i has at vertex j the dual of the basis paths from j to i; arrows act
    by the transpose of precomposition.

    Args:
      algebra: Algebra: The algebra

    Returns:
      tuple[Module, ...]: I_1, ..., I_n named "I1".."In"
    """
    return tuple(_injective(algebra, v) for v in range(algebra.vertex_count))


def regular_module(algebra: Algebra):
    from ..modules.constructions import direct_sum

    return direct_sum(list(projective_modules(algebra))).module.renamed("Λ")
