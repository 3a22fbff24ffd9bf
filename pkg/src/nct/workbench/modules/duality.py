from __future__ import annotations

from ..algebra import opposite_algebra
from .Module import Module
from .ModuleMap import ModuleMap


_duals: dict[Module, Module] = {}


def dual_module(M: Module) -> Module:
    """The k-dual D M = Hom_k(M, k) as a module over the opposite algebra

    Vertex spaces are kept; the matrix of a reversed arrow is the transpose
    of the original arrow matrix. Duals are cached in both directions, so
    D D M is M itself.

    Args:
      M: Module: A module over Λ

    Returns:
      Module: The dual, over opposite_algebra(Λ)
    """
    if M in _duals:
        return _duals[M]
    opposite = opposite_algebra(M.algebra)
    name = f"D{M.name}" if M.name else None
    dual = Module(opposite, M.dim_vector, [m.T for m in M.arrow_mats], name=name, check=False)
    _duals[M] = dual
    _duals[dual] = M
    return dual


def dual_map(f: ModuleMap) -> ModuleMap:
    """D f: D target -> D source, the vertex-wise transpose"""
    return ModuleMap(dual_module(f.target), dual_module(f.source), [m.T for m in f.vertex_mats], check=False)
