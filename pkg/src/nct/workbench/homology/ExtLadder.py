from __future__ import annotations

from dataclasses import dataclass

from ..linalg import Mat, rank
from ..modules import Module


@dataclass(frozen=True)
class ExtLadder:
    """The sequence 0 -> Ext^n(x, r_n) -> ... -> Ext^n(x, r_1) -> 0

    Attributes:
      degree: int: n
      x: Module: The test object
      modules: tuple[Module, ...]: r_n..r_1
      dims: tuple[int, ...]: dim Ext^n(x, r_i), in the same order
      induced_maps: tuple[Mat, ...]: Ext^n(x, r_i) -> Ext^n(x, r_{i-1}), in the same order
    """
    degree: int
    x: Module
    modules: tuple[Module, ...]
    dims: tuple[int, ...]
    induced_maps: tuple[Mat, ...]

    def failure(self: ExtLadder) -> str | None:
        """Where exactness fails, or None if the ladder is exact"""
        for first, second in zip(self.induced_maps, self.induced_maps[1:]):
            if not (second @ first).is_zero():
                return f"induced maps out of Ext^{self.degree}(x, r) do not compose to zero"
        ranks = [0] + [rank(m) for m in self.induced_maps] + [0]
        for k, dim in enumerate(self.dims):
            incoming, outgoing = ranks[k], ranks[k + 1]
            if incoming + outgoing != dim:
                return (f"Ext^{self.degree}({self.x.label}, {self.modules[k].label}) has dimension {dim} "
                        f"but the maps around it have ranks {incoming} and {outgoing}")
        return None

    def is_exact(self: ExtLadder) -> bool:
        return self.failure() is None
