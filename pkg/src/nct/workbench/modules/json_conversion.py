from __future__ import annotations

from typing import Any

from ..linalg import Mat
from ..shared import InputError, WorkbenchError, read_json, require, require_integer
from .Module import Module


def matrix_from_list(value: Any, rows: int, cols: int, algebra, source: str, location: str) -> Mat:
    require(isinstance(value, list), "matrix must be a list of rows", source, location)
    if rows == 0:
        require(value == [] or all(r == [] for r in value), f"expected an empty matrix, got {value!r}",
                source, location)
        return Mat.zeros(algebra.field, 0, cols)
    require(len(value) == rows, f"expected {rows} rows, got {len(value)}", source, location)
    entries = []
    for i, row in enumerate(value):
        row_location = f"{location}[{i}]"
        require(isinstance(row, list) and len(row) == cols, f"expected a row of {cols} entries", source,
                row_location)
        entries.append([require_integer(x, source, f"{row_location}[{j}]") for j, x in enumerate(row)])
    return Mat.from_rows(algebra.field, entries, cols)


def module_from_dict(data: Any, algebra, source: str = "<module>") -> Module:
    """Load a module description over algebra

    The format is {"dim_vector": [...], "arrows": {"<arrow id>": [[row], ...]}}
    with an optional "name". Entries are reduced mod p and an arrow that is
    left out acts by the zero matrix.

    Args:
      data: Any: The parsed JSON value
      algebra: Algebra: The algebra the module is over
      source: str: (Default value = "<module>")
        The file name used in error messages

    Returns:
      Module: The validated module

    Raises:
      InputError: If the description is malformed or violates a relation
    """
    require(isinstance(data, dict), "module description must be an object", source, "$")
    require("dim_vector" in data, "missing key 'dim_vector'", source, "$")
    dims = data["dim_vector"]
    require(isinstance(dims, list) and len(dims) == algebra.vertex_count,
            f"dim_vector must list {algebra.vertex_count} dimensions", source, "$.dim_vector")
    dims = [require_integer(d, source, f"$.dim_vector[{k}]") for k, d in enumerate(dims)]
    require(all(d >= 0 for d in dims), "dimensions must be non-negative", source, "$.dim_vector")
    arrows = data.get("arrows", {})
    require(isinstance(arrows, dict), "arrows must be an object keyed by arrow id", source, "$.arrows")
    known = {a.id for a in algebra.quiver.arrows}
    for arrow_id in arrows:
        require(arrow_id in known, f"unknown arrow {arrow_id!r}", source, "$.arrows")
    mats = []
    for arrow in algebra.quiver.arrows:
        rows, cols = dims[arrow.target], dims[arrow.source]
        if arrow.id in arrows:
            mats.append(matrix_from_list(arrows[arrow.id], rows, cols, algebra, source, f"$.arrows.{arrow.id}"))
        else:
            mats.append(Mat.zeros(algebra.field, rows, cols))
    name = data.get("name")
    try:
        return Module(algebra, dims, mats, name=str(name) if name is not None else None)
    except (ValueError, WorkbenchError) as e:
        raise InputError(str(e), source, "$.arrows")


def module_to_dict(module: Module) -> dict:
    result = {
        "dim_vector": list(module.dim_vector),
        "arrows": {a.id: m.to_list() for a, m in zip(module.algebra.quiver.arrows, module.arrow_mats)},
    }
    if module.name is not None:
        result["name"] = module.name
    return result


def load_module(path: str, algebra) -> Module:
    return module_from_dict(read_json(path), algebra, path)
