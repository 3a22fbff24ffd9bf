from __future__ import annotations

from typing import Any

from ..modules import ModuleMap, matrix_from_list, module_from_dict, module_to_dict
from ..shared import InputError, read_json, require, require_integer
from .NSequence import NSequence


def map_from_dict(data: Any, source_module, target_module, source: str, location: str) -> ModuleMap:
    """A module map written as a list of vertex matrices"""
    algebra = source_module.algebra
    require(isinstance(data, list) and len(data) == algebra.vertex_count,
            f"a map lists {algebra.vertex_count} vertex matrices", source, location)
    mats = [matrix_from_list(value, target_module.dim_vector[v], source_module.dim_vector[v], algebra, source,
                             f"{location}[{v}]")
            for v, value in enumerate(data)]
    try:
        return ModuleMap(source_module, target_module, mats)
    except ValueError as e:
        raise InputError(str(e), source, location)


def map_to_dict(f: ModuleMap) -> list:
    return [m.to_list() for m in f.vertex_mats]


def nsequence_from_dict(data: Any, algebra, source: str = "<sequence>") -> NSequence:
    """Load an n-sequence

    The format is {"n": int, "modules": [m_{n+1}, ..., m_0], "maps": [u_{n+1}, ..., u_1]}
    with modules in the module file format and every map a list of vertex
    matrices.

    Args:
      data: Any: The parsed JSON value
      algebra: Algebra: The algebra the modules are over
      source: str: (Default value = "<sequence>")
        The file name used in error messages

    Returns:
      NSequence: The validated sequence

    Raises:
      InputError: If the description is malformed or the maps do not form a complex
    """
    require(isinstance(data, dict), "sequence description must be an object", source, "$")
    for key in ("n", "modules", "maps"):
        require(key in data, f"missing key {key!r}", source, "$")
    n = require_integer(data["n"], source, "$.n")
    require(n >= 1, "n must be at least 1", source, "$.n")
    modules_data, maps_data = data["modules"], data["maps"]
    require(isinstance(modules_data, list) and len(modules_data) == n + 2, f"expected {n + 2} modules", source,
            "$.modules")
    require(isinstance(maps_data, list) and len(maps_data) == n + 1, f"expected {n + 1} maps", source, "$.maps")
    modules = [module_from_dict(entry, algebra, f"{source} $.modules[{k}]") for k, entry in enumerate(modules_data)]
    maps = [map_from_dict(entry, modules[k], modules[k + 1], source, f"$.maps[{k}]")
            for k, entry in enumerate(maps_data)]
    try:
        return NSequence(n, modules, maps)
    except ValueError as e:
        raise InputError(str(e), source, "$.maps")


def nsequence_to_dict(s: NSequence) -> dict:
    return {
        "n": s.n,
        "modules": [module_to_dict(m) for m in s.modules],
        "maps": [map_to_dict(u) for u in s.maps],
    }


def load_nsequence(path: str, algebra) -> NSequence:
    return nsequence_from_dict(read_json(path), algebra, path)
