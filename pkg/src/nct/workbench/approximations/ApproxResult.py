from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any

from ..modules import DirectSum, Module, ModuleMap, Subcat, factor_before, factor_through, hom_basis


@dataclass(frozen=True)
class ApproxResult:
    """A right or left add(C)-approximation

    A right approximation is a map φ: x -> m with x a direct sum of
    generators of C, through which every map from add(C) to m factors. A
    left approximation φ: m -> x is the dual notion.

    Attributes:
      map: ModuleMap: φ
      subcat: Subcat: C
      summands: tuple[int, ...]: The generator index of each summand of x, in order
      parts: DirectSum: x as a direct sum of those generators
      left: bool: True for a left approximation
      minimal: bool: True only when minimality was verified
      note: str: Anything the construction wants reported
    """
    map: ModuleMap
    subcat: Subcat
    summands: tuple[int, ...]
    parts: DirectSum
    left: bool = False
    minimal: bool = False
    note: str = ""

    @property
    def module(self: ApproxResult) -> Module:
        """The approximating object x"""
        return self.parts.module

    @property
    def approximated(self: ApproxResult) -> Module:
        """The module m being approximated"""
        return self.map.source if self.left else self.map.target

    @property
    def surjective(self: ApproxResult) -> bool:
        return self.map.is_surjective()

    @property
    def injective(self: ApproxResult) -> bool:
        return self.map.is_injective()

    def components(self: ApproxResult) -> list[ModuleMap]:
        """The restriction of φ to each summand, or its projection onto each summand"""
        if self.left:
            return [p @ self.map for p in self.parts.projections]
        return [self.map @ i for i in self.parts.injections]

    def failure(self: ApproxResult) -> str | None:
        """Recheck the approximation property on every basis hom of every generator

        Returns:
          str | None: The first generator hom that does not factor, or None
        """
        m = self.approximated
        for g in self.subcat:
            if self.left:
                for h in hom_basis(m, g):
                    if factor_before(h, self.map) is None:
                        return f"a map {m.label} -> {g.label} does not factor through the approximation"
            else:
                for h in hom_basis(g, m):
                    if factor_through(h, self.map) is None:
                        return f"a map {g.label} -> {m.label} does not factor through the approximation"
        return None

    def with_note(self: ApproxResult, note: str) -> ApproxResult:
        return replace(self, note=f"{self.note}; {note}" if self.note else note)

    def to_dict(self: ApproxResult) -> dict[str, Any]:
        labels = self.subcat.labels
        result = {
            "approximated": self.approximated.label,
            "side": "left" if self.left else "right",
            "summands": [labels[k] for k in self.summands],
            "minimal": self.minimal,
        }
        if self.left:
            result["injective"] = self.injective
        else:
            result["surjective"] = self.surjective
        if self.note:
            result["note"] = self.note
        return result
