from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..algebra import Algebra, Path, injective_modules, projective_modules
from ..linalg import Mat, complement_basis, left_inverse, vstack
from ..modules import (
    DirectSum,
    Module,
    ModuleMap,
    direct_sum,
    map_factorization,
    radical_bases,
    socle_bases,
)
from ..shared import CACHE_SIZE
from .Resolution import Resolution

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def projective_sum(algebra: Algebra, tops: tuple[int, ...]) -> DirectSum:
    """⊕ P_v for v in tops, in that order"""
    projectives = projective_modules(algebra)
    return direct_sum([projectives[v] for v in tops], algebra=algebra)


@lru_cache(maxsize=None)
def injective_sum(algebra: Algebra, socles: tuple[int, ...]) -> DirectSum:
    """⊕ I_v for v in socles, in that order"""
    injectives = injective_modules(algebra)
    return direct_sum([injectives[v] for v in socles], algebra=algebra)


@lru_cache(maxsize=None)
def projective_labels(algebra: Algebra, tops: tuple[int, ...]) -> tuple[tuple[tuple[int, int], ...], ...]:
    """For each vertex j, the basis of (⊕ P_v)_j as pairs (summand, basis path index)"""
    return tuple(
        tuple((s, k) for s, v in enumerate(tops) for k in algebra.basis_indices_between(v, j))
        for j in range(algebra.vertex_count)
    )


def generator_position(algebra: Algebra, tops: tuple[int, ...], s: int) -> int:
    """Position of the generator e_v of summand s in (⊕ P_v)_v"""
    v = tops[s]
    trivial = algebra.basis_index(Path(v, v))
    return projective_labels(algebra, tops)[v].index((s, trivial))


def map_from_projective(tops: Sequence[int], target: Module, images: Sequence[Mat]) -> ModuleMap:
    """The map ⊕ P_v -> target sending the generator of summand s to images[s]

    Args:
      tops: Sequence[int]: The summand vertices
      target: Module: The codomain
      images: Sequence[Mat]: Columns in target at vertex tops[s]

    Returns:
      ModuleMap: The unique module map with these generator images
    """
    algebra = target.algebra
    tops = tuple(tops)
    source = projective_sum(algebra, tops).module
    labels = projective_labels(algebra, tops)
    mats = []
    for j in range(algebra.vertex_count):
        columns = [target.path_matrix(algebra.path_basis[k]) @ images[s] for s, k in labels[j]]
        if columns:
            mats.append(Mat(target.field, np.hstack([c.array for c in columns])))
        else:
            mats.append(Mat.zeros(target.field, target.dim_vector[j], 0))
    return ModuleMap(source, target, mats, check=False)


def map_to_injective(socles: Sequence[int], source: Module, functionals: Sequence[Mat]) -> ModuleMap:
    """The map source -> ⊕ I_v whose summand s is the functional functionals[s] on source at socles[s]

    Args:
      socles: Sequence[int]: The summand vertices
      source: Module: The domain
      functionals: Sequence[Mat]: Rows on source at vertex socles[s]

    Returns:
      ModuleMap: The map m -> (q -> functional(m·q))
    """
    algebra = source.algebra
    socles = tuple(socles)
    target = injective_sum(algebra, socles).module
    mats = []
    for j in range(algebra.vertex_count):
        rows = [functionals[s] @ source.path_matrix(algebra.path_basis[k])
                for s, v in enumerate(socles) for k in algebra.basis_indices_between(j, v)]
        mats.append(vstack(source.field, rows, source.dim_vector[j]))
    return ModuleMap(source, target, mats, check=False)


def top_generators(M: Module) -> tuple[tuple[int, ...], list[Mat]]:
    """Vertices and vectors of elements whose classes form a basis of top M = M / rad M"""
    tops, images = [], []
    for j, rad in enumerate(radical_bases(M)):
        complement = complement_basis(rad)
        for c in range(complement.cols):
            tops.append(j)
            images.append(complement.column(c))
    return tuple(tops), images


@dataclass(frozen=True)
class _Step:
    tops: tuple[int, ...]
    cover: ModuleMap
    next_map: ModuleMap


@lru_cache(maxsize=CACHE_SIZE)
def _cover_step(M: Module) -> _Step:
    tops, images = top_generators(M)
    cover = map_from_projective(tops, M, images)
    kernel = map_factorization(cover).kernel
    logger.debug("projective cover of %s has tops %s, kernel %s", M.label, list(tops), list(kernel.source.dim_vector))
    return _Step(tops, cover, kernel)


@lru_cache(maxsize=CACHE_SIZE)
def _envelope_step(M: Module) -> _Step:
    socles, functionals = [], []
    for j, socle in enumerate(socle_bases(M)):
        if socle.cols == 0:
            continue
        dual = left_inverse(socle)
        for r in range(dual.rows):
            socles.append(j)
            functionals.append(dual.take_rows([r]))
    envelope = map_to_injective(socles, M, functionals)
    cokernel = map_factorization(envelope).cokernel
    logger.debug("injective envelope of %s has socles %s", M.label, socles)
    return _Step(tuple(socles), envelope, cokernel)


def projective_cover(M: Module) -> ModuleMap:
    """The projective cover ⊕ P_v -> M, with one summand per basis vector of top M

    The kernel lies in the radical of the cover, so the cover is right minimal.

    Args:
      M: Module: The module

    Returns:
      ModuleMap: A surjection from a projective module
    """
    return _cover_step(M).cover


def injective_envelope(M: Module) -> ModuleMap:
    """The injective envelope M -> ⊕ I_v, with one summand per basis vector of soc M"""
    return _envelope_step(M).cover


def _resolve(M: Module, K: int, injective: bool) -> Resolution:
    if K < 0:
        raise ValueError(f"depth must be non-negative, got {K}")
    step_of = _envelope_step if injective else _cover_step
    terms, tops, covers, links = [], [], [], []
    current = M
    for i in range(K + 1):
        if current.is_zero():
            break
        step = step_of(current)
        covers.append(step.cover)
        tops.append(step.tops)
        terms.append(step.cover.target if injective else step.cover.source)
        if i == K:
            break
        current = step.next_map.target if injective else step.next_map.source
        if current.is_zero():
            break
        links.append(step.next_map)
    return Resolution(M, K, tuple(terms), tuple(tops), tuple(covers), tuple(links), injective)


@lru_cache(maxsize=CACHE_SIZE)
def min_projective_resolution(M: Module, K: int) -> Resolution:
    """The minimal projective resolution P_K -> ... -> P_0 -> M

    Args:
      M: Module: The module
      K: int: The last term to compute

    Returns:
      Resolution: Terms P_0..P_K and syzygies Ω^1..Ω^K, stopping at the first zero syzygy
    """
    return _resolve(M, K, injective=False)


@lru_cache(maxsize=CACHE_SIZE)
def min_injective_coresolution(M: Module, K: int) -> Resolution:
    """The minimal injective coresolution M -> I^0 -> ... -> I^K

    Args:
      M: Module: The module
      K: int: The last term to compute

    Returns:
      Resolution: Terms I^0..I^K and cosyzygies Ω^{-1}..Ω^{-K}, stopping at the first zero one
    """
    return _resolve(M, K, injective=True)


def syzygy(M: Module, i: int) -> Module:
    """Ω^i M, computed from the minimal projective resolution"""
    return min_projective_resolution(M, i).syzygy(i)


def cosyzygy(M: Module, i: int) -> Module:
    """Ω^{-i} M, computed from the minimal injective coresolution"""
    return min_injective_coresolution(M, i).syzygy(i)
