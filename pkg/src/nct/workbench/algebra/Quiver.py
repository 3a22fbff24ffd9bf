from __future__ import annotations

from collections.abc import Generator, Sequence
from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class Arrow:
    """An arrow of a quiver

    Attributes:
      id: str: The arrow label, unique within its quiver
      source: int: The source vertex
      target: int: The target vertex
    """
    id: str
    source: int
    target: int


@dataclass(frozen=True, order=True)
class Path:
    """A path in a quiver

    Arrows are stored as arrow indices in application order, so the path
    b∘a (a then b) is stored as (a, b). A path of length 0 is the trivial
    path at its source.

    Attributes:
      source: int: The starting vertex
      target: int: The ending vertex
      arrows: tuple[int, ...]: Arrow indices, innermost first
    """
    source: int
    target: int
    arrows: tuple[int, ...] = ()

    @property
    def length(self: Path) -> int:
        return len(self.arrows)

    def then(self: Path, other: Path) -> Path | None:
        """The path self followed by other, or None if they do not compose"""
        if self.target != other.source:
            return None
        return Path(self.source, other.target, self.arrows + other.arrows)

    def reversed(self: Path) -> Path:
        return Path(self.target, self.source, tuple(reversed(self.arrows)))


@dataclass(frozen=True)
class Quiver:
    """A finite quiver; loops and parallel arrows are allowed

    Attributes:
      vertex_count: int: The number of vertices, numbered from 0
      arrows: tuple[Arrow, ...]: The arrows with unique ids
    """
    vertex_count: int
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self: Quiver) -> None:
        if self.vertex_count < 1:
            raise ValueError(f"a quiver needs at least one vertex, got {self.vertex_count}")
        object.__setattr__(self, "arrows", tuple(self.arrows))
        seen = set()
        for arrow in self.arrows:
            if arrow.id in seen:
                raise ValueError(f"duplicate arrow id {arrow.id!r}")
            seen.add(arrow.id)
            for end in (arrow.source, arrow.target):
                if not 0 <= end < self.vertex_count:
                    raise ValueError(
                        f"arrow {arrow.id!r} has vertex {end} outside 0..{self.vertex_count - 1}")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Sequence[tuple]) -> Quiver:
        """Build a quiver from (id, source, target) triples"""
        return cls(vertex_count, tuple(Arrow(str(i), int(s), int(t)) for i, s, t in edges))

    @cached_property
    def _index(self: Quiver) -> dict[str, int]:
        return {arrow.id: k for k, arrow in enumerate(self.arrows)}

    def arrow_index(self: Quiver, arrow_id: str) -> int:
        try:
            return self._index[str(arrow_id)]
        except KeyError:
            raise ValueError(f"unknown arrow id {arrow_id!r}")

    def arrows_from(self: Quiver, vertex: int) -> list[int]:
        return [k for k, arrow in enumerate(self.arrows) if arrow.source == vertex]

    def arrows_to(self: Quiver, vertex: int) -> list[int]:
        return [k for k, arrow in enumerate(self.arrows) if arrow.target == vertex]

    def path(self: Quiver, arrow_ids: Sequence[str], source: int | None = None) -> Path:
        """The path through the given arrow ids in application order

        Args:
          arrow_ids: Sequence[str]: Arrow ids, innermost first
          source: int | None: (Default value = None)
            The source vertex, required for the trivial path

        Returns:
          Path: The path

        Raises:
          ValueError: If the arrows do not compose
        """
        indices = tuple(self.arrow_index(a) for a in arrow_ids)
        if not indices:
            if source is None:
                raise ValueError("the trivial path needs a source vertex")
            return Path(source, source)
        for first, second in zip(indices, indices[1:]):
            if self.arrows[first].target != self.arrows[second].source:
                raise ValueError(f"arrows {list(arrow_ids)} do not compose")
        return Path(self.arrows[indices[0]].source, self.arrows[indices[-1]].target, indices)

    def trivial_paths(self: Quiver) -> list[Path]:
        return [Path(v, v) for v in range(self.vertex_count)]

    def paths_up_to(self: Quiver, length: int) -> Generator[Path]:
        """Every path of length at most length, shortest first"""
        level = self.trivial_paths()
        for _ in range(length + 1):
            yield from level
            level = [
                Path(q.source, self.arrows[a].target, q.arrows + (a,))
                for q in level
                for a in self.arrows_from(q.target)
            ]

    def opposite(self: Quiver) -> Quiver:
        return Quiver(self.vertex_count, tuple(Arrow(a.id, a.target, a.source) for a in self.arrows))
