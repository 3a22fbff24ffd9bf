from __future__ import annotations

from collections.abc import Iterator, Sequence

from ..shared import DEFAULT_ENUMERATION_CAP
from .Module import Module
from .constructions import DirectSum, direct_sum
from .decomposition import in_add, is_indecomposable, is_isomorphic


class Subcat:
    """The additive closure add(generators) of finitely many indecomposables

    Attributes:
      generators: tuple[Module, ...]: Pairwise non-isomorphic indecomposable modules
      name: str | None: An optional display name
      seed: int: Seed used by the membership tests
      cap: int: Enumeration cap used by the membership tests
    """

    def __init__(
            self: Subcat,
            generators: Sequence[Module],
            name: str | None = None,
            check: bool = False,
            seed: int = 0,
            cap: int = DEFAULT_ENUMERATION_CAP,
    ):
        self.generators = tuple(generators)
        self.name = name
        self.seed = seed
        self.cap = cap
        algebras = {id(g.algebra) for g in self.generators}
        if len(algebras) > 1:
            raise ValueError("generators are modules over different algebras")
        if check:
            self.validate()

    def validate(self: Subcat) -> None:
        """Check that generators are indecomposable and pairwise non-isomorphic

        Raises:
          ValueError: If some generator is decomposable or two are isomorphic
        """
        for g in self.generators:
            if not is_indecomposable(g, self.seed, self.cap):
                raise ValueError(f"generator {g.label} is not indecomposable")
        for i, g in enumerate(self.generators):
            for h in self.generators[i + 1:]:
                if is_isomorphic(g, h, self.seed, self.cap, indecomposable=True) is not None:
                    raise ValueError(f"generators {g.label} and {h.label} are isomorphic")

    @property
    def algebra(self: Subcat):
        return self.generators[0].algebra if self.generators else None

    @property
    def labels(self: Subcat) -> list[str]:
        return [g.label for g in self.generators]

    def __len__(self: Subcat) -> int:
        return len(self.generators)

    def __iter__(self: Subcat) -> Iterator[Module]:
        return iter(self.generators)

    def __getitem__(self: Subcat, k: int) -> Module:
        return self.generators[k]

    def __repr__(self: Subcat) -> str:
        label = f"{self.name} = " if self.name else ""
        return f"Subcat({label}add{{{', '.join(self.labels)}}})"

    def in_add(self: Subcat, M: Module) -> dict[int, int] | None:
        """Multiplicities of the generators in M, or None if M is not in add"""
        return in_add(M, self.generators, self.seed, self.cap)

    def __contains__(self: Subcat, M: Module) -> bool:
        return self.in_add(M) is not None

    def index_of(self: Subcat, M: Module) -> int | None:
        """The generator isomorphic to the indecomposable M"""
        for k, g in enumerate(self.generators):
            if is_isomorphic(M, g, self.seed, self.cap, indecomposable=True) is not None:
                return k
        return None

    def sum_of(self: Subcat, multiplicities: dict[int, int], algebra=None) -> DirectSum:
        """The direct sum with the given generator multiplicities, in generator order"""
        parts = [self.generators[k] for k in sorted(multiplicities) for _ in range(multiplicities[k])]
        return direct_sum(parts, algebra=algebra or self.algebra)

    def with_generators(self: Subcat, extra: Sequence[Module], name: str | None = None) -> Subcat:
        """add of these generators together with those of extra not already present"""
        generators = list(self.generators)
        for m in extra:
            if all(is_isomorphic(m, g, self.seed, self.cap, indecomposable=True) is None for g in generators):
                generators.append(m)
        return Subcat(generators, name=name, seed=self.seed, cap=self.cap)
