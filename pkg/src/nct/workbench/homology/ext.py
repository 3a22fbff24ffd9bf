from __future__ import annotations

import logging
from collections.abc import Sequence
from functools import lru_cache

from ..linalg import Mat, block_diag, hstack, image_basis, kernel_basis, rank, rref, vstack
from ..modules import Module, ModuleMap, hom_dim, hom_functor_matrix
from ..shared import CACHE_SIZE
from .ExtGroup import ExtGroup
from .ExtLadder import ExtLadder
from .resolutions import (
    generator_position,
    min_injective_coresolution,
    min_projective_resolution,
    projective_labels,
)

logger = logging.getLogger(__name__)


def _cochain_dim(tops: Sequence[int], N: Module) -> int:
    return sum(N.dim_vector[v] for v in tops)


@lru_cache(maxsize=CACHE_SIZE)
def cochain_differential(M: Module, N: Module, k: int) -> Mat:
    """δ^k: Hom(P_k, N) -> Hom(P_{k+1}, N) for the minimal projective resolution of M

    The block from summand s of P_k to summand t of P_{k+1} is Σ_q c_q N_q,
    where d(e_t) = Σ c_q (e_s·q) over basis paths q.

    Args:
      M: Module: The module resolved
      N: Module: The coefficient module
      k: int: The degree, -1 gives the zero map into C^0

    Returns:
      Mat: The differential on cochain columns
    """
    resolution = min_projective_resolution(M, max(k + 1, 0))
    source_tops = resolution.tops_at(k)
    target_tops = resolution.tops_at(k + 1)
    field = N.field
    if not source_tops or not target_tops:
        return Mat.zeros(field, _cochain_dim(target_tops, N), _cochain_dim(source_tops, N))
    algebra = M.algebra
    d = resolution.differentials[k]
    labels = projective_labels(algebra, source_tops)
    rows = []
    for t, v in enumerate(target_tops):
        image = d.vertex_mats[v].column(generator_position(algebra, target_tops, t)).entries
        blocks = [Mat.zeros(field, N.dim_vector[v], N.dim_vector[u]) for u in source_tops]
        for (s, path_index), coefficient in zip(labels[v], image):
            if coefficient:
                blocks[s] = blocks[s] + N.path_matrix(algebra.path_basis[path_index]) * coefficient
        rows.append(hstack(field, blocks, N.dim_vector[v]))
    return vstack(field, rows, _cochain_dim(source_tops, N))


def ext_dim(M: Module, N: Module, k: int) -> int:
    """dim Ext^k(M, N), from the minimal projective resolution of M

    Args:
      M: Module: The first argument
      N: Module: The second argument
      k: int: The degree, 0 gives dim Hom(M, N)

    Returns:
      int: The dimension
    """
    if k < 0:
        raise ValueError(f"Ext degree must be non-negative, got {k}")
    if M.algebra is not N.algebra:
        raise ValueError(f"{M.label} and {N.label} are modules over different algebras")
    delta = cochain_differential(M, N, k)
    previous = cochain_differential(M, N, k - 1)
    return delta.cols - rank(delta) - rank(previous)


@lru_cache(maxsize=CACHE_SIZE)
def ext_group(M: Module, N: Module, k: int) -> ExtGroup:
    """Ext^k(M, N) with explicit cocycle, coboundary and class bases

    Args:
      M: Module: The first argument
      N: Module: The second argument
      k: int: The degree

    Returns:
      ExtGroup: The group
    """
    if k < 0:
        raise ValueError(f"Ext degree must be non-negative, got {k}")
    cocycles = kernel_basis(cochain_differential(M, N, k))
    coboundaries = image_basis(cochain_differential(M, N, k - 1))
    _, _, pivots = rref(hstack(N.field, [coboundaries, cocycles], cocycles.rows))
    chosen = [c - coboundaries.cols for c in pivots if c >= coboundaries.cols]
    group = ExtGroup(M, N, k, min_projective_resolution(M, k + 1), cocycles, coboundaries,
                     cocycles.take_columns(chosen))
    logger.debug("%r", group)
    return group


def ext_induced_map(x: Module, f: ModuleMap, k: int) -> Mat:
    """The matrix of Ext^k(x, f): Ext^k(x, r) -> Ext^k(x, r′) for f: r -> r′

    Computed on cochains by postcomposition with f and read off in the class
    bases of ext_group.

    Args:
      x: Module: The fixed first argument
      f: ModuleMap: The map r -> r′
      k: int: The degree

    Returns:
      Mat: A matrix of shape (dim Ext^k(x, r′), dim Ext^k(x, r))
    """
    source = ext_group(x, f.source, k)
    target = ext_group(x, f.target, k)
    if source.dim == 0 or target.dim == 0:
        return Mat.zeros(x.field, target.dim, source.dim)
    on_cochains = block_diag(x.field, [f.vertex_mats[v] for v in source.tops])
    return target.coordinates(on_cochains @ source.classes)


def ext_dim_by_coresolution(M: Module, N: Module, k: int) -> int:
    """dim Ext^k(M, N) from Hom(M, I^•) for the minimal injective coresolution of N"""
    if k < 0:
        raise ValueError(f"Ext degree must be non-negative, got {k}")
    coresolution = min_injective_coresolution(N, k + 1)
    if k > coresolution.length:
        return 0
    differentials = coresolution.differentials

    def hom_rank(i: int) -> int:
        # rank of Hom(M, d^{i+1}): Hom(M, I^i) -> Hom(M, I^{i+1})
        if i < 0 or i >= len(differentials):
            return 0
        return rank(hom_functor_matrix(M, differentials[i]))

    return hom_dim(M, coresolution.terms[k]) - hom_rank(k) - hom_rank(k - 1)


def ext_ladder(
        x: Module,
        maps: Sequence[ModuleMap],
        n: int,
        modules: Sequence[Module] | None = None,
) -> ExtLadder:
    """Ext^n(x, -) applied to r_n -> ... -> r_1

    Args:
      x: Module: The test object
      maps: Sequence[ModuleMap]: r_n -> r_{n-1}, ..., r_2 -> r_1
      n: int: The Ext degree
      modules: Sequence[Module] | None: (Default value = None)
        r_n..r_1, needed when maps is empty

    Returns:
      ExtLadder: Dimensions and induced maps
    """
    if modules is None:
        if not maps:
            raise ValueError("a ladder without maps needs its modules")
        modules = [maps[0].source] + [m.target for m in maps]
    modules = tuple(modules)
    dims = tuple(ext_dim(x, r, n) for r in modules)
    induced = tuple(ext_induced_map(x, f, n) for f in maps)
    return ExtLadder(n, x, modules, dims, induced)


def is_ext_orthogonal(M: Module, N: Module, degrees: Sequence[int]) -> bool:
    return all(ext_dim(M, N, k) == 0 for k in degrees)
