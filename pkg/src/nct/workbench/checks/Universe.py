from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import replace
from enum import Enum

from ..modules import Module, Subcat, is_indecomposable, is_isomorphic
from ..shared import DEFAULT_ENUMERATION_CAP, CheckReport


class Completeness(str, Enum):
    COMPLETE = "Complete"
    DECLARED = "Declared"


class Universe:
    """The indecomposable modules a check quantifies over

    A Complete universe lists every indecomposable up to isomorphism and is
    only produced by the catalog, where a classification backs it. Any other
    list is Declared, and passing verdicts over it are relative.

    Attributes:
      algebra: Algebra: The algebra
      indecomposables: tuple[Module, ...]: Pairwise non-isomorphic indecomposables
      completeness: Completeness: Whether the list is known to be complete
      aliases: dict[str, int]: Extra names for the modules, by index
      name: str | None: An optional display name
    """

    def __init__(
            self: Universe,
            algebra,
            indecomposables: Sequence[Module],
            completeness: Completeness = Completeness.DECLARED,
            aliases: dict[str, int] | None = None,
            name: str | None = None,
    ):
        self.algebra = algebra
        self.indecomposables = tuple(indecomposables)
        self.completeness = Completeness(completeness)
        self.aliases = dict(aliases or {})
        self.name = name
        for m in self.indecomposables:
            if m.algebra is not algebra:
                raise ValueError(f"{m.label} is not a module over {algebra!r}")
        for alias, k in self.aliases.items():
            if not 0 <= k < len(self.indecomposables):
                raise ValueError(f"alias {alias!r} points at no module")

    @classmethod
    def declared(cls, algebra, modules: Sequence[Module], name: str | None = None) -> Universe:
        return cls(algebra, modules, Completeness.DECLARED, name=name)

    def validate(self: Universe, seed: int = 0, cap: int = DEFAULT_ENUMERATION_CAP) -> None:
        """Check that the modules are indecomposable and pairwise non-isomorphic

        Raises:
          ValueError: If they are not
        """
        for m in self.indecomposables:
            if not is_indecomposable(m, seed, cap):
                raise ValueError(f"{m.label} is not indecomposable")
        for i, m in enumerate(self.indecomposables):
            for other in self.indecomposables[i + 1:]:
                if is_isomorphic(m, other, seed, cap, indecomposable=True) is not None:
                    raise ValueError(f"{m.label} and {other.label} are isomorphic")

    @property
    def is_complete(self: Universe) -> bool:
        return self.completeness is Completeness.COMPLETE

    @property
    def labels(self: Universe) -> list[str]:
        return [m.label for m in self.indecomposables]

    @property
    def scope(self: Universe) -> str:
        label = self.name or repr(self.algebra)
        return f"{self.completeness.value} universe of {len(self)} indecomposables over {label}"

    def __len__(self: Universe) -> int:
        return len(self.indecomposables)

    def __iter__(self: Universe) -> Iterator[Module]:
        return iter(self.indecomposables)

    def __getitem__(self: Universe, k: int) -> Module:
        return self.indecomposables[k]

    def __repr__(self: Universe) -> str:
        return f"Universe({self.completeness.value}, {', '.join(self.labels)})"

    def lookup(self: Universe, name: str) -> Module:
        """The module with this label or alias

        Raises:
          KeyError: If no module has that name
        """
        if name in self.aliases:
            return self.indecomposables[self.aliases[name]]
        for m in self.indecomposables:
            if m.label == name:
                return m
        raise KeyError(f"no module named {name!r} in {self!r}")

    def subcat(self: Universe, names: Sequence[str], name: str | None = None) -> Subcat:
        """add of the named modules, duplicates dropped"""
        generators = []
        for module in (self.lookup(n) for n in names):
            if all(module is not g for g in generators):
                generators.append(module)
        return Subcat(generators, name=name)

    def index_of(self: Universe, M: Module, seed: int = 0, cap: int = DEFAULT_ENUMERATION_CAP) -> int | None:
        for k, m in enumerate(self.indecomposables):
            if is_isomorphic(M, m, seed, cap, indecomposable=True) is not None:
                return k
        return None

    def members_of(self: Universe, Msub: Subcat) -> list[Module]:
        """The modules of the universe that lie in add(Msub)"""
        return [m for m in self.indecomposables if Msub.index_of(m) is not None]

    def finalize(self: Universe, report: CheckReport) -> CheckReport:
        """Tag a report with the universe, downgrading Pass when the universe is only declared"""
        scope = f"{report.scope}; {self.scope}" if report.scope else self.scope
        if self.is_complete:
            return replace(report, scope=scope)
        return report.relative_to(scope)
