from __future__ import annotations

from dataclasses import dataclass

from ..linalg import Mat, hstack, solve_matrix
from ..modules import Module, ModuleMap
from .Resolution import Resolution
from .resolutions import map_from_projective


@dataclass(frozen=True)
class ExtGroup:
    """Ext^k(M, N) as cocycles modulo coboundaries in Hom(P_k, N) = ⊕_s N_{v_s}

    A cochain is a column listing the image of every generator of P_k, the
    summands taken in the order of resolution.tops_at(k).

    Attributes:
      source: Module: M
      target: Module: N
      degree: int: k
      resolution: Resolution: The minimal projective resolution of M used
      cocycles: Mat: A basis of the cocycles, one per column
      coboundaries: Mat: A basis of the coboundaries
      classes: Mat: Cocycles whose classes form a basis of Ext^k(M, N)
    """
    source: Module
    target: Module
    degree: int
    resolution: Resolution
    cocycles: Mat
    coboundaries: Mat
    classes: Mat

    @property
    def dim(self: ExtGroup) -> int:
        return self.classes.cols

    @property
    def tops(self: ExtGroup) -> tuple[int, ...]:
        return self.resolution.tops_at(self.degree)

    @property
    def cochain_dim(self: ExtGroup) -> int:
        return self.cocycles.rows

    def coordinates(self: ExtGroup, cocycles: Mat) -> Mat:
        """Coordinates of the classes of the given cocycles in the class basis

        Args:
          cocycles: Mat: One cocycle per column

        Returns:
          Mat: One coordinate column per input column

        Raises:
          ValueError: If some column is not a cocycle
        """
        field = self.target.field
        basis = hstack(field, [self.coboundaries, self.classes], self.cochain_dim)
        solution = solve_matrix(basis, cocycles)
        if solution is None:
            raise ValueError(f"cochain is not a cocycle of Ext^{self.degree}({self.source.label}, {self.target.label})")
        return solution.take_rows(range(self.coboundaries.cols, basis.cols))

    def is_zero_class(self: ExtGroup, cocycle: Mat) -> bool:
        return self.coordinates(cocycle).is_zero()

    def representative(self: ExtGroup, coefficients) -> Mat:
        """The cocycle Σ c_i h_i for the class basis h_i"""
        column = Mat.column_vector(self.target.field, coefficients)
        return self.classes @ column

    def split(self: ExtGroup, cochain: Mat) -> list[Mat]:
        """The generator images listed by a cochain column"""
        parts, offset = [], 0
        for v in self.tops:
            d = self.target.dim_vector[v]
            parts.append(cochain.take_rows(range(offset, offset + d)))
            offset += d
        return parts

    def cocycle_map(self: ExtGroup, cochain: Mat) -> ModuleMap:
        """The map P_k -> N a cochain describes"""
        return map_from_projective(self.tops, self.target, self.split(cochain))

    def __repr__(self: ExtGroup) -> str:
        return f"ExtGroup(Ext^{self.degree}({self.source.label}, {self.target.label}), dim={self.dim})"
