from __future__ import annotations

from dataclasses import dataclass

from ..linalg import in_column_space
from ..modules import Module, ModuleMap, map_factorization, radical_bases, socle_bases


@dataclass(frozen=True)
class Resolution:
    """A minimal projective resolution or minimal injective coresolution

    For a projective resolution of M the terms are P_0..P_K, covers[i] is the
    projective cover P_i -> Ω^i M (with Ω^0 M = M) and syzygy_maps[i] is the
    inclusion Ω^{i+1} M -> P_i. For an injective coresolution the terms are
    I^0..I^K, covers[i] is the envelope Ω^{-i} M -> I^i and syzygy_maps[i] is
    the projection I^i -> Ω^{-(i+1)} M. The resolution stops early once a
    syzygy vanishes.

    Attributes:
      target: Module: The module being resolved
      depth: int: The requested K
      terms: tuple[Module, ...]: P_0..P_length or I^0..I^length
      tops: tuple[tuple[int, ...], ...]: For each term the vertex of every indecomposable summand, in order
      covers: tuple[ModuleMap, ...]: The projective covers or injective envelopes
      syzygy_maps: tuple[ModuleMap, ...]: The syzygy inclusions or cosyzygy projections
      injective: bool: True for a coresolution
    """
    target: Module
    depth: int
    terms: tuple[Module, ...]
    tops: tuple[tuple[int, ...], ...]
    covers: tuple[ModuleMap, ...]
    syzygy_maps: tuple[ModuleMap, ...]
    injective: bool = False

    @property
    def length(self: Resolution) -> int:
        """Index of the last nonzero term, -1 for the zero module"""
        return len(self.terms) - 1

    @property
    def augmentation(self: Resolution) -> ModuleMap:
        """P_0 -> M, or M -> I^0"""
        return self.covers[0]

    @property
    def syzygies(self: Resolution) -> tuple[Module, ...]:
        """Ω^1..Ω^k (or Ω^{-1}..Ω^{-k}) for the nonzero ones within depth"""
        return tuple(m.target if self.injective else m.source for m in self.syzygy_maps)

    @property
    def differentials(self: Resolution) -> tuple[ModuleMap, ...]:
        """d_1..d_length with d_i: P_i -> P_{i-1}, or d^i: I^{i-1} -> I^i"""
        if self.injective:
            return tuple(self.covers[i] @ self.syzygy_maps[i - 1] for i in range(1, len(self.terms)))
        return tuple(self.syzygy_maps[i - 1] @ self.covers[i] for i in range(1, len(self.terms)))

    def term(self: Resolution, i: int) -> Module:
        if i < len(self.terms):
            return self.terms[i]
        if i > self.depth:
            raise ValueError(f"term {i} is beyond the computed depth {self.depth}")
        return Module.zero(self.target.algebra)

    def tops_at(self: Resolution, i: int) -> tuple[int, ...]:
        """Summand vertices of term i; empty when the term is zero"""
        if i < 0:
            return ()
        if i < len(self.tops):
            return self.tops[i]
        if i > self.depth:
            raise ValueError(f"term {i} is beyond the computed depth {self.depth}")
        return ()

    def syzygy(self: Resolution, i: int) -> Module:
        """Ω^i (or Ω^{-i}); Ω^0 is the target and vanishing syzygies are zero modules"""
        if i == 0:
            return self.target
        if i <= len(self.syzygy_maps):
            return self.syzygies[i - 1]
        if i > self.depth:
            raise ValueError(f"syzygy {i} is beyond the computed depth {self.depth}")
        return Module.zero(self.target.algebra)

    def is_exact(self: Resolution) -> bool:
        """Vertex-wise exactness of the augmented complex, checked with ranks"""
        if self.target.is_zero():
            return True
        if self.injective:
            maps = [self.augmentation, *self.differentials]
        else:
            maps = [*reversed(self.differentials), self.augmentation]
        for first, second in zip(maps, maps[1:]):
            if not (second @ first).is_zero():
                return False
            if first.rank() + second.rank() != first.target.dimension:
                return False
        if self.length < self.depth:
            # a vanishing syzygy closes the complex with a zero
            closed = maps[-1].is_surjective() if self.injective else maps[0].is_injective()
            if not closed:
                return False
        return self.augmentation.is_injective() if self.injective else self.augmentation.is_surjective()

    def is_minimal(self: Resolution) -> bool:
        """Every cover has kernel in the radical, or every envelope has image containing the socle"""
        for cover in self.covers:
            if self.injective:
                # an envelope is essential iff its image contains the socle of the injective
                image = map_factorization(cover).mono
                checks = zip(socle_bases(cover.target), image.vertex_mats)
                if not all(in_column_space(img, soc) for soc, img in checks):
                    return False
            else:
                kernel = map_factorization(cover).kernel
                checks = zip(radical_bases(cover.source), kernel.vertex_mats)
                if not all(in_column_space(rad, ker) for rad, ker in checks):
                    return False
        return True

    def __repr__(self: Resolution) -> str:
        kind = "coresolution" if self.injective else "resolution"
        return f"Resolution({kind} of {self.target.label}, terms={[t.label for t in self.terms]})"
