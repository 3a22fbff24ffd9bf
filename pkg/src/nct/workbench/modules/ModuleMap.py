from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from ..linalg import Mat, rank, inverse, flatten
from .Module import Module


class ModuleMap:
    """A morphism of representations, one matrix per vertex

    For every arrow x: i -> j the square
    target.arrow_mats[x] @ vertex_mats[i] == vertex_mats[j] @ source.arrow_mats[x]
    commutes. Composition is written g @ f for "f then g".

    Attributes:
      source: Module: The domain
      target: Module: The codomain
      vertex_mats: tuple[Mat, ...]: Matrices of shape (target.dim_vector[v], source.dim_vector[v])
    """

    def __init__(
            self: ModuleMap,
            source: Module,
            target: Module,
            vertex_mats: Sequence[Mat],
            check: bool = True,
    ):
        self.source = source
        self.target = target
        self.vertex_mats = tuple(vertex_mats)
        if check:
            self.validate()

    def validate(self: ModuleMap) -> None:
        if self.source.algebra is not self.target.algebra:
            raise ValueError("source and target are modules over different algebras")
        algebra = self.source.algebra
        if len(self.vertex_mats) != algebra.vertex_count:
            raise ValueError(f"{len(self.vertex_mats)} vertex matrices for {algebra.vertex_count} vertices")
        for v, mat in enumerate(self.vertex_mats):
            expected = (self.target.dim_vector[v], self.source.dim_vector[v])
            if mat.shape != expected:
                raise ValueError(f"vertex {v} matrix has shape {mat.shape}, expected {expected}")
        for k, arrow in enumerate(algebra.quiver.arrows):
            left = self.target.arrow_mats[k] @ self.vertex_mats[arrow.source]
            right = self.vertex_mats[arrow.target] @ self.source.arrow_mats[k]
            if left != right:
                raise ValueError(f"square at arrow {arrow.id!r} does not commute")

    @property
    def field(self: ModuleMap):
        return self.source.field

    def vertex_mat(self: ModuleMap, v: int) -> Mat:
        return self.vertex_mats[v]

    def __matmul__(self: ModuleMap, other: ModuleMap) -> ModuleMap:
        if other.target is not self.source:
            raise ValueError(
                f"cannot compose {other.source.label}->{other.target.label} "
                f"with {self.source.label}->{self.target.label}")
        return ModuleMap(other.source, self.target,
                         [a @ b for a, b in zip(self.vertex_mats, other.vertex_mats)], check=False)

    def _check_parallel(self: ModuleMap, other: ModuleMap) -> None:
        if other.source is not self.source or other.target is not self.target:
            raise ValueError("maps are not parallel")

    def __add__(self: ModuleMap, other: ModuleMap) -> ModuleMap:
        self._check_parallel(other)
        return ModuleMap(self.source, self.target,
                         [a + b for a, b in zip(self.vertex_mats, other.vertex_mats)], check=False)

    def __sub__(self: ModuleMap, other: ModuleMap) -> ModuleMap:
        self._check_parallel(other)
        return ModuleMap(self.source, self.target,
                         [a - b for a, b in zip(self.vertex_mats, other.vertex_mats)], check=False)

    def __neg__(self: ModuleMap) -> ModuleMap:
        return ModuleMap(self.source, self.target, [-a for a in self.vertex_mats], check=False)

    def __mul__(self: ModuleMap, scalar: int) -> ModuleMap:
        return ModuleMap(self.source, self.target, [a * scalar for a in self.vertex_mats], check=False)

    __rmul__ = __mul__

    def is_zero(self: ModuleMap) -> bool:
        return all(m.is_zero() for m in self.vertex_mats)

    def rank(self: ModuleMap) -> int:
        return sum(rank(m) for m in self.vertex_mats)

    def is_injective(self: ModuleMap) -> bool:
        return self.rank() == self.source.dimension

    def is_surjective(self: ModuleMap) -> bool:
        return self.rank() == self.target.dimension

    def is_isomorphism(self: ModuleMap) -> bool:
        return self.source.dim_vector == self.target.dim_vector and self.is_injective()

    def inverse(self: ModuleMap) -> ModuleMap:
        if not self.is_isomorphism():
            raise ValueError("map is not invertible")
        return ModuleMap(self.target, self.source, [inverse(m) for m in self.vertex_mats], check=False)

    def vector(self: ModuleMap) -> np.ndarray:
        """The row-major entries of all vertex matrices, concatenated"""
        return flatten(list(self.vertex_mats))

    def equals(self: ModuleMap, other: ModuleMap) -> bool:
        return (other.source is self.source and other.target is self.target
                and all(a == b for a, b in zip(self.vertex_mats, other.vertex_mats)))

    def __repr__(self: ModuleMap) -> str:
        return f"ModuleMap({self.source.label} -> {self.target.label}, rank={self.rank()})"


def identity_map(module: Module) -> ModuleMap:
    return ModuleMap(module, module, [Mat.identity(module.field, d) for d in module.dim_vector], check=False)


def zero_map(source: Module, target: Module) -> ModuleMap:
    return ModuleMap(source, target,
                     [Mat.zeros(source.field, t, s) for s, t in zip(source.dim_vector, target.dim_vector)],
                     check=False)


def map_from_vector(source: Module, target: Module, vector: np.ndarray) -> ModuleMap:
    """Inverse of ModuleMap.vector"""
    mats = []
    offset = 0
    for s, t in zip(source.dim_vector, target.dim_vector):
        size = s * t
        mats.append(Mat(source.field, np.asarray(vector[offset:offset + size]).reshape(t, s)))
        offset += size
    return ModuleMap(source, target, mats, check=False)
