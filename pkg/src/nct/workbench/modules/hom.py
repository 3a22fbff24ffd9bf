from __future__ import annotations

import logging
from functools import lru_cache

import numpy as np

from ..linalg import Mat, kernel_basis, mulmod, solve, solve_matrix
from ..shared import CACHE_SIZE
from .Module import Module
from .ModuleMap import ModuleMap, map_from_vector, zero_map

logger = logging.getLogger(__name__)


def _check_same_algebra(M: Module, N: Module) -> None:
    if M.algebra is not N.algebra:
        raise ValueError(f"{M.label} and {N.label} are modules over different algebras")


@lru_cache(maxsize=CACHE_SIZE)
def _hom_system(M: Module, N: Module) -> Mat:
    """The commuting-square constraints on the row-major entries of (F_v)_v"""
    algebra = M.algebra
    offsets = np.cumsum([0] + [n * m for n, m in zip(N.dim_vector, M.dim_vector)])
    blocks = []
    for k, arrow in enumerate(algebra.quiver.arrows):
        i, j = arrow.source, arrow.target
        rows = N.dim_vector[j] * M.dim_vector[i]
        block = np.zeros((rows, offsets[-1]), dtype=np.int64)
        # N_x F_i - F_j M_x = 0, using vec(A F B) = (A kron B^T) vec(F)
        block[:, offsets[i]:offsets[i + 1]] += np.kron(N.arrow_mats[k].array, np.eye(M.dim_vector[i], dtype=np.int64))
        block[:, offsets[j]:offsets[j + 1]] -= np.kron(np.eye(N.dim_vector[j], dtype=np.int64), M.arrow_mats[k].array.T)
        blocks.append(block)
    if not blocks:
        return Mat.zeros(M.field, 0, int(offsets[-1]))
    return Mat(M.field, np.vstack(blocks))


@lru_cache(maxsize=CACHE_SIZE)
def hom_basis(M: Module, N: Module) -> tuple[ModuleMap, ...]:
    """A basis of Hom(M, N)

    The basis is the null space of the commuting-square system, ordered as
    kernel_basis orders it, so it is deterministic.

    Args:
      M: Module: The source
      N: Module: The target

    Returns:
      tuple[ModuleMap, ...]: The basis maps, possibly empty
    """
    _check_same_algebra(M, N)
    K = kernel_basis(_hom_system(M, N))
    basis = tuple(map_from_vector(M, N, K.array[:, c]) for c in range(K.cols))
    logger.debug("dim Hom(%s, %s) = %d", M.label, N.label, len(basis))
    return basis


def hom_dim(M: Module, N: Module) -> int:
    return len(hom_basis(M, N))


@lru_cache(maxsize=CACHE_SIZE)
def _hom_basis_matrix(M: Module, N: Module) -> Mat:
    basis = hom_basis(M, N)
    size = sum(n * m for n, m in zip(N.dim_vector, M.dim_vector))
    if not basis:
        return Mat.zeros(M.field, size, 0)
    return Mat(M.field, np.column_stack([f.vector() for f in basis]))


def hom_coordinates(f: ModuleMap) -> Mat:
    """Coordinates of f in hom_basis(f.source, f.target), as a column"""
    column = Mat(f.field, f.vector().reshape(-1, 1))
    coordinates = solve(_hom_basis_matrix(f.source, f.target), column)
    if coordinates is None:
        raise ValueError("map is not a module homomorphism")
    return coordinates


def combine(M: Module, N: Module, coefficients) -> ModuleMap:
    """The linear combination of hom_basis(M, N) with the given coefficients"""
    basis_matrix = _hom_basis_matrix(M, N)
    if basis_matrix.cols == 0:
        return zero_map(M, N)
    column = np.asarray([int(c) for c in coefficients], dtype=np.int64).reshape(-1, 1) % M.field.p
    return map_from_vector(M, N, mulmod(basis_matrix.array, column, M.field.p).ravel())


def hom_functor_matrix(g: Module, f: ModuleMap, covariant: bool = True) -> Mat:
    """The matrix of Hom(g, f) or Hom(f, g) in hom bases

    Args:
      g: Module: The fixed argument
      f: ModuleMap: The map A -> B the functor is applied to
      covariant: bool: (Default value = True)
        True for Hom(g, f): Hom(g, A) -> Hom(g, B), h -> f∘h;
        False for Hom(f, g): Hom(B, g) -> Hom(A, g), h -> h∘f

    Returns:
      Mat: A matrix whose columns are images of the source basis
    """
    if covariant:
        domain, codomain = hom_basis(g, f.source), (g, f.target)
        images = [f @ h for h in domain]
    else:
        domain, codomain = hom_basis(f.target, g), (f.source, g)
        images = [h @ f for h in domain]
    target_basis = _hom_basis_matrix(*codomain)
    if not images:
        return Mat.zeros(g.field, target_basis.cols, 0)
    values = Mat(g.field, np.column_stack([h.vector() for h in images]))
    coordinates = solve_matrix(target_basis, values)
    if coordinates is None:
        raise ValueError("image of a homomorphism left the hom space")
    return coordinates


def factor_through(f: ModuleMap, g: ModuleMap) -> ModuleMap | None:
    """Some h with f = g∘h, where f: X -> Z and g: Y -> Z, or None"""
    if f.target is not g.target:
        raise ValueError("maps to factor must share a target")
    candidates = hom_basis(f.source, g.source)
    return _solve_combination(f, [g @ h for h in candidates], candidates, f.source, g.source)


def factor_before(f: ModuleMap, g: ModuleMap) -> ModuleMap | None:
    """Some h with f = h∘g, where f: X -> Z and g: X -> Y, or None"""
    if f.source is not g.source:
        raise ValueError("maps to factor must share a source")
    candidates = hom_basis(g.target, f.target)
    return _solve_combination(f, [h @ g for h in candidates], candidates, g.target, f.target)


def _solve_combination(
        f: ModuleMap,
        images: list[ModuleMap],
        candidates: tuple[ModuleMap, ...],
        source: Module,
        target: Module,
) -> ModuleMap | None:
    if not images:
        return zero_map(source, target) if f.is_zero() else None
    system = Mat(f.field, np.column_stack([h.vector() for h in images]))
    coefficients = solve(system, Mat(f.field, f.vector().reshape(-1, 1)))
    if coefficients is None:
        return None
    return combine(source, target, coefficients.entries)


def solve_factorization(target: ModuleMap, through: ModuleMap, side: str = "before") -> ModuleMap | None:
    """Factor target through another map

    Args:
      target: ModuleMap: The map to factor
      through: ModuleMap: The map to factor through
      side: str: (Default value = "before")
        "before" finds h with target = through∘h, "after" finds h with target = h∘through

    Returns:
      ModuleMap | None: Some h, or None if target does not factor
    """
    if side == "before":
        return factor_through(target, through)
    if side == "after":
        return factor_before(target, through)
    raise ValueError(f"side must be 'before' or 'after', got {side!r}")
