from __future__ import annotations

from typing import Any

from ..shared import InputError, WorkbenchError, read_json, require, require_integer
from .Algebra import Algebra, Relation
from .Quiver import Arrow, Quiver
from .build import build_algebra


def algebra_from_dict(data: Any, source: str = "<algebra>") -> Algebra:
    """Load an algebra description

    The format is {"p": int, "L": int, "vertices": int,
    "arrows": [[id, src, tgt], ...], "relations": [[[coeff, [arrow ids]], ...], ...]}
    with 0-based vertices and arrow-id lists in application order.

    Args:
      data: Any: The parsed JSON value
      source: str: (Default value = "<algebra>")
        The file name used in error messages

    Returns:
      Algebra: The algebra

    Raises:
      InputError: If the description is malformed or not admissible
    """
    require(isinstance(data, dict), "algebra description must be an object", source, "$")
    for key in ("p", "L", "vertices"):
        require(key in data, f"missing key {key!r}", source, "$")
    p = require_integer(data["p"], source, "$.p")
    L = require_integer(data["L"], source, "$.L")
    vertices = require_integer(data["vertices"], source, "$.vertices")
    arrows = []
    for k, entry in enumerate(data.get("arrows", [])):
        location = f"$.arrows[{k}]"
        require(isinstance(entry, list) and len(entry) == 3, "arrow must be [id, source, target]", source, location)
        arrows.append(Arrow(str(entry[0]), require_integer(entry[1], source, location + "[1]"),
                            require_integer(entry[2], source, location + "[2]")))
    try:
        quiver = Quiver(vertices, tuple(arrows))
    except ValueError as e:
        raise InputError(str(e), source, "$.arrows")
    relations = relations_from_list(data.get("relations", []), quiver, source)
    try:
        return build_algebra(quiver, relations, L, p, name=data.get("name"))
    except (ValueError, WorkbenchError) as e:
        raise InputError(str(e), source, "$")


def relations_from_list(entries: Any, quiver: Quiver, source: str, root: str = "$.relations") -> list[Relation]:
    """Parse relations written as [[coeff, [arrow ids]], ...], arrow ids in application order"""
    require(isinstance(entries, list), "relations must be a list", source, root)
    relations = []
    for r, entry in enumerate(entries):
        location = f"{root}[{r}]"
        require(isinstance(entry, list) and entry, "relation must be a non-empty list of terms", source, location)
        terms = []
        for t, term in enumerate(entry):
            term_location = f"{location}[{t}]"
            require(isinstance(term, list) and len(term) == 2 and isinstance(term[1], list),
                    "term must be [coefficient, [arrow ids]]", source, term_location)
            coefficient = require_integer(term[0], source, term_location + "[0]")
            try:
                path = quiver.path([str(a) for a in term[1]])
            except ValueError as e:
                raise InputError(str(e), source, term_location + "[1]")
            terms.append((coefficient, path))
        try:
            relations.append(Relation(tuple(terms)))
        except (ValueError, WorkbenchError) as e:
            raise InputError(str(e), source, location)
    return relations


def algebra_to_dict(algebra: Algebra) -> dict:
    quiver = algebra.quiver
    return {
        "p": algebra.p,
        "L": algebra.bound,
        "vertices": quiver.vertex_count,
        "arrows": [[a.id, a.source, a.target] for a in quiver.arrows],
        "relations": [
            [[c, [quiver.arrows[a].id for a in path.arrows]] for c, path in relation.terms]
            for relation in algebra.relations
        ],
    }


def load_algebra(path: str) -> Algebra:
    return algebra_from_dict(read_json(path), path)
