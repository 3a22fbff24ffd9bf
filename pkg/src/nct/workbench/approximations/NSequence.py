from __future__ import annotations

from collections.abc import Sequence

from ..modules import Module, ModuleMap, block_map, direct_sum, identity_map, zero_map


class NSequence:
    """A complex 0 -> m_{n+1} -> m_n -> ... -> m_1 -> m_0 -> 0

    Modules and maps are stored left to right: modules[0] is m_{n+1} and
    maps[0] is u_{n+1}: m_{n+1} -> m_n. Shorter chains are padded with zero
    modules at either end, so every sequence has n + 2 modules.

    Attributes:
      n: int: The length parameter
      modules: tuple[Module, ...]: m_{n+1}, ..., m_0
      maps: tuple[ModuleMap, ...]: u_{n+1}, ..., u_1
    """

    def __init__(
            self: NSequence,
            n: int,
            modules: Sequence[Module],
            maps: Sequence[ModuleMap],
            check: bool = True,
    ):
        self.n = n
        self.modules = tuple(modules)
        self.maps = tuple(maps)
        if check:
            self.validate()

    def validate(self: NSequence) -> None:
        """Check lengths, composability and that consecutive composites vanish

        Raises:
          ValueError: If the data does not form a complex of the right length
        """
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if len(self.modules) != self.n + 2:
            raise ValueError(f"an {self.n}-sequence has {self.n + 2} modules, got {len(self.modules)}")
        if len(self.maps) != self.n + 1:
            raise ValueError(f"an {self.n}-sequence has {self.n + 1} maps, got {len(self.maps)}")
        for k, u in enumerate(self.maps):
            if u.source is not self.modules[k] or u.target is not self.modules[k + 1]:
                raise ValueError(f"u_{self.n + 1 - k} does not go from m_{self.n + 1 - k} to m_{self.n - k}")
        for k, (first, second) in enumerate(zip(self.maps, self.maps[1:])):
            if not (second @ first).is_zero():
                raise ValueError(f"u_{self.n - k} ∘ u_{self.n + 1 - k} is not zero")

    @property
    def algebra(self: NSequence):
        return self.modules[0].algebra

    @property
    def left(self: NSequence) -> Module:
        return self.modules[0]

    @property
    def right(self: NSequence) -> Module:
        return self.modules[-1]

    @property
    def dimension(self: NSequence) -> int:
        return sum(m.dimension for m in self.modules)

    def module(self: NSequence, i: int) -> Module:
        """m_i for 0 <= i <= n + 1"""
        if not 0 <= i <= self.n + 1:
            raise ValueError(f"no module m_{i} in an {self.n}-sequence")
        return self.modules[self.n + 1 - i]

    def u(self: NSequence, i: int) -> ModuleMap:
        """u_i: m_i -> m_{i-1} for 1 <= i <= n + 1"""
        if not 1 <= i <= self.n + 1:
            raise ValueError(f"no map u_{i} in an {self.n}-sequence")
        return self.maps[self.n + 1 - i]

    def middle(self: NSequence) -> tuple[Module, ...]:
        """m_n, ..., m_1"""
        return self.modules[1:-1]

    def tail(self: NSequence) -> Tail:
        """The part m_{n+1} -> ... -> m_2 left of the precover x -> m"""
        return Tail(self.n, self.modules[:-2], self.maps[:-2])

    def with_maps(self: NSequence, replaced: dict[int, ModuleMap]) -> NSequence:
        """The same modules with the maps u_i for i in replaced swapped out"""
        maps = list(self.maps)
        for i, u in replaced.items():
            maps[self.n + 1 - i] = u
        return NSequence(self.n, self.modules, maps)

    @classmethod
    def contractible(cls, n: int, g: Module, i: int) -> NSequence:
        """The elementary contractible sequence with m_i = m_{i-1} = g, u_i the identity and zeros elsewhere"""
        if not 1 <= i <= n + 1:
            raise ValueError(f"the identity of a contractible {n}-sequence sits at u_1..u_{n + 1}, got u_{i}")
        zero = Module.zero(g.algebra)
        modules = [g if k in (i, i - 1) else zero for k in range(n + 1, -1, -1)]
        maps = []
        for k in range(n + 1, 0, -1):
            source, target = modules[n + 1 - k], modules[n + 2 - k]
            maps.append(identity_map(g) if k == i else zero_map(source, target))
        return cls(n, modules, maps, check=False)

    @classmethod
    def zero(cls, n: int, algebra) -> NSequence:
        zero = Module.zero(algebra)
        return cls(n, [zero] * (n + 2), [zero_map(zero, zero)] * (n + 1), check=False)

    @classmethod
    def split(cls, n: int, left: Module, right: Module) -> NSequence:
        """The split sequence from left to right: 0 -> left -> left -> 0 ... 0 -> right -> right -> 0"""
        return direct_sum_sequences([cls.contractible(n, left, n + 1), cls.contractible(n, right, 1)])

    def __repr__(self: NSequence) -> str:
        return f"NSequence(n={self.n}, {' -> '.join(m.label for m in self.modules)})"


def direct_sum_sequences(sequences: Sequence[NSequence]) -> NSequence:
    """The termwise direct sum, with block-diagonal maps

    Zero summands are dropped from each term, so summing with the zero
    sequence returns terms equal to the other summands.
    """
    if not sequences:
        raise ValueError("the direct sum of no sequences needs an algebra, use NSequence.zero")
    n = sequences[0].n
    if any(s.n != n for s in sequences):
        raise ValueError("sequences of different lengths cannot be summed")
    algebra = sequences[0].algebra
    sums = []
    for k in range(n + 2):
        parts = [s.modules[k] for s in sequences if not s.modules[k].is_zero()]
        sums.append(direct_sum(parts, algebra=algebra))
    maps = []
    for k in range(n + 1):
        source, target = sums[k], sums[k + 1]
        rows = [j for j, s in enumerate(sequences) if not s.modules[k + 1].is_zero()]
        cols = [j for j, s in enumerate(sequences) if not s.modules[k].is_zero()]
        blocks = [[sequences[r].maps[k] if r == c else None for c in cols] for r in rows]
        maps.append(block_map(source, target, blocks))
    return NSequence(n, [s.module for s in sums], maps, check=False)


class Tail:
    """A chain r_n -> r_{n-1} -> ... -> r_1, the left part of an n-exact sequence

    Attributes:
      n: int: The length parameter
      modules: tuple[Module, ...]: r_n, ..., r_1
      maps: tuple[ModuleMap, ...]: r_n -> r_{n-1}, ..., r_2 -> r_1
    """

    def __init__(self: Tail, n: int, modules: Sequence[Module], maps: Sequence[ModuleMap]):
        self.n = n
        self.modules = tuple(modules)
        self.maps = tuple(maps)
        if len(self.modules) != n or len(self.maps) != n - 1:
            raise ValueError(f"a tail of length {n} has {n} modules and {n - 1} maps")
        for k, f in enumerate(self.maps):
            if f.source is not self.modules[k] or f.target is not self.modules[k + 1]:
                raise ValueError(f"map {k} of the tail is not composable")

    @classmethod
    def identity(cls, n: int, g: Module, i: int) -> Tail:
        """The contractible tail with r_i = r_{i-1} = g joined by the identity, for 2 <= i <= n"""
        if not 2 <= i <= n:
            raise ValueError(f"an identity tail of length {n} needs 2 <= i <= {n}, got {i}")
        zero = Module.zero(g.algebra)
        modules = [g if k in (i, i - 1) else zero for k in range(n, 0, -1)]
        maps = [identity_map(g) if k == i else zero_map(modules[n - k], modules[n - k + 1])
                for k in range(n, 1, -1)]
        return cls(n, modules, maps)

    @classmethod
    def zero(cls, n: int, algebra) -> Tail:
        zero = Module.zero(algebra)
        return cls(n, [zero] * n, [zero_map(zero, zero)] * (n - 1))

    @property
    def label(self: Tail) -> str:
        return " -> ".join(m.label for m in self.modules)

    def __repr__(self: Tail) -> str:
        return f"Tail(n={self.n}, {self.label})"
