from __future__ import annotations

from collections.abc import Sequence
from functools import reduce
from typing import TYPE_CHECKING

from ..linalg import Mat
from ..shared import RelationViolatedError

if TYPE_CHECKING:
    from ..algebra import Algebra, Path


_zeros: dict = {}


class Module:
    """A finite-dimensional representation of a bound quiver algebra

    A representation assigns a vector space GF(p)^d_i to every vertex i and
    to every arrow x: i -> j a matrix of shape (d_j, d_i). Equality is
    identity, so modules can key caches.

    Attributes:
      algebra: Algebra: The algebra the representation is over
      dim_vector: tuple[int, ...]: The vertex dimensions
      arrow_mats: tuple[Mat, ...]: One matrix per arrow, in quiver order
      name: str | None: An optional display name
    """

    def __init__(
            self: Module,
            algebra: Algebra,
            dim_vector: Sequence[int],
            arrow_mats: Sequence[Mat],
            name: str | None = None,
            check: bool = True,
    ):
        self.algebra = algebra
        self.dim_vector = tuple(int(d) for d in dim_vector)
        self.arrow_mats = tuple(arrow_mats)
        self.name = name
        if check:
            self.validate()

    @classmethod
    def zero(cls, algebra: Algebra) -> Module:
        """The zero module, one shared object per algebra"""
        if algebra in _zeros:
            return _zeros[algebra]
        field = algebra.field
        _zeros[algebra] = cls(
            algebra,
            [0] * algebra.vertex_count,
            [Mat.zeros(field, 0, 0) for _ in algebra.quiver.arrows],
            name="0",
            check=False,
        )
        return _zeros[algebra]

    def validate(self: Module) -> None:
        """Check the shapes and the relations

        Raises:
          ValueError: If the dimension vector or a matrix has the wrong shape
          RelationViolatedError: If some relation does not evaluate to zero
        """
        algebra = self.algebra
        if len(self.dim_vector) != algebra.vertex_count:
            raise ValueError(
                f"dimension vector has {len(self.dim_vector)} entries for {algebra.vertex_count} vertices")
        if any(d < 0 for d in self.dim_vector):
            raise ValueError(f"negative entry in dimension vector {self.dim_vector}")
        if len(self.arrow_mats) != algebra.arrow_count:
            raise ValueError(f"{len(self.arrow_mats)} arrow matrices for {algebra.arrow_count} arrows")
        for arrow, mat in zip(algebra.quiver.arrows, self.arrow_mats):
            expected = (self.dim_vector[arrow.target], self.dim_vector[arrow.source])
            if mat.field != algebra.field:
                raise ValueError(f"arrow {arrow.id!r} matrix is over {mat.field}, not {algebra.field}")
            if mat.shape != expected:
                raise ValueError(f"arrow {arrow.id!r} matrix has shape {mat.shape}, expected {expected}")
        for k, relation in enumerate(algebra.relations):
            total = Mat.zeros(algebra.field, self.dim_vector[relation.target], self.dim_vector[relation.source])
            for coefficient, path in relation.terms:
                total = total + self.path_matrix(path) * coefficient
            if not total.is_zero():
                raise RelationViolatedError(f"{self.label} violates relation {k}")

    @property
    def field(self: Module):
        return self.algebra.field

    @property
    def dimension(self: Module) -> int:
        return sum(self.dim_vector)

    @property
    def label(self: Module) -> str:
        return self.name if self.name is not None else f"module{list(self.dim_vector)}"

    def is_zero(self: Module) -> bool:
        return self.dimension == 0

    def arrow_mat(self: Module, arrow: int | str) -> Mat:
        if isinstance(arrow, str):
            arrow = self.algebra.quiver.arrow_index(arrow)
        return self.arrow_mats[arrow]

    def path_matrix(self: Module, path: Path) -> Mat:
        """The action of a path, innermost arrow applied first"""
        start = Mat.identity(self.field, self.dim_vector[path.source])
        return reduce(lambda acc, a: self.arrow_mats[a] @ acc, path.arrows, start)

    def renamed(self: Module, name: str | None) -> Module:
        return Module(self.algebra, self.dim_vector, self.arrow_mats, name=name, check=False)

    def same_representation(self: Module, other: Module) -> bool:
        """Equal as matrices, not merely isomorphic"""
        return (self.algebra is other.algebra and self.dim_vector == other.dim_vector
                and self.arrow_mats == other.arrow_mats)

    def __repr__(self: Module) -> str:
        return f"Module({self.label}, dim_vector={list(self.dim_vector)})"
