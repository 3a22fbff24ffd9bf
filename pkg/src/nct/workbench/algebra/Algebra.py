from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from ..linalg import PrimeField
from ..shared import NotAdmissibleError
from .Quiver import Path, Quiver


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths of length at least 2

    Attributes:
      terms: tuple[tuple[int, Path], ...]: (coefficient, path) pairs
    """
    terms: tuple[tuple[int, Path], ...]

    def __post_init__(self: Relation) -> None:
        object.__setattr__(self, "terms", tuple((int(c), path) for c, path in self.terms))
        if not self.terms:
            raise ValueError("a relation needs at least one term")
        ends = {(path.source, path.target) for _, path in self.terms}
        if len(ends) != 1:
            raise ValueError(f"relation terms are not parallel: {sorted(ends)}")
        for _, path in self.terms:
            if path.length < 2:
                raise NotAdmissibleError(
                    f"relation term of length {path.length} is not in the square of the radical")

    @property
    def source(self: Relation) -> int:
        return self.terms[0][1].source

    @property
    def target(self: Relation) -> int:
        return self.terms[0][1].target

    @classmethod
    def monomial(cls, path: Path) -> Relation:
        return cls(((1, path),))

    def reversed(self: Relation) -> Relation:
        return Relation(tuple((c, path.reversed()) for c, path in self.terms))


class Algebra:
    """A bound quiver algebra kQ/I over GF(p) with an explicit path basis

    Instances are built by build_algebra and are immutable afterwards.
    Equality is identity; caches throughout the package are keyed on it.

    Attributes:
      quiver: Quiver: The quiver Q
      relations: tuple[Relation, ...]: Generators of the ideal I
      field: PrimeField: The ground field
      bound: int: L with rad^L contained in I
      path_basis: tuple[Path, ...]: Paths whose residues form a basis, shortest first
      name: str | None: An optional display name
    """

    def __init__(
            self: Algebra,
            quiver: Quiver,
            relations: Sequence[Relation],
            field: PrimeField,
            bound: int,
            path_basis: Sequence[Path],
            normal_forms: dict[Path, np.ndarray],
            name: str | None = None,
    ):
        self.quiver = quiver
        self.relations = tuple(relations)
        self.field = field
        self.bound = bound
        self.path_basis = tuple(path_basis)
        self.name = name
        self._normal_forms = normal_forms
        self._index = {path: k for k, path in enumerate(self.path_basis)}
        self._zero = np.zeros(len(self.path_basis), dtype=np.int64)
        self._zero.flags.writeable = False

    @property
    def p(self: Algebra) -> int:
        return self.field.p

    @property
    def dimension(self: Algebra) -> int:
        return len(self.path_basis)

    @property
    def vertex_count(self: Algebra) -> int:
        return self.quiver.vertex_count

    @property
    def arrow_count(self: Algebra) -> int:
        return len(self.quiver.arrows)

    def __repr__(self: Algebra) -> str:
        label = self.name or f"kQ/I over {self.field}"
        return f"Algebra({label}, dim={self.dimension})"

    def basis_index(self: Algebra, path: Path) -> int | None:
        return self._index.get(path)

    def reduce(self: Algebra, path: Path) -> np.ndarray:
        """The normal form of a path as a coefficient vector over path_basis

        Paths longer than the bound are zero.
        """
        if path.length > self.bound:
            return self._zero
        return self._normal_forms[path]

    def paths_between(self: Algebra, source: int, target: int) -> list[Path]:
        """Basis paths from source to target, in basis order"""
        return [q for q in self.path_basis if q.source == source and q.target == target]

    def basis_indices_between(self: Algebra, source: int, target: int) -> list[int]:
        return [k for k, q in enumerate(self.path_basis) if q.source == source and q.target == target]

    def multiply(self: Algebra, first: int, second: int) -> np.ndarray:
        """The product of two basis elements, first applied first"""
        composite = self.path_basis[first].then(self.path_basis[second])
        if composite is None:
            return self._zero
        return self.reduce(composite)
