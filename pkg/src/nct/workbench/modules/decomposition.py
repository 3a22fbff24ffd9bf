from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from ..linalg import Mat, charpoly, evaluate, factor_mod_p, image_basis, in_column_space, mulmod, rank
from ..shared import (
    DEFAULT_ENUMERATION_CAP,
    DecompositionInconclusiveError,
    EnumerationTooLargeError,
    IsoInconclusiveError,
    enumerate_vectors,
    enumeration_size,
    seeded_rng,
)
from .Module import Module
from .ModuleMap import ModuleMap, identity_map, map_from_vector, zero_map
from .constructions import map_factorization, splitting_projections
from .hom import combine, hom_basis

logger = logging.getLogger(__name__)

# random endomorphisms tried before falling back to enumeration
RANDOM_TRIALS = 32


@dataclass(frozen=True)
class Summand:
    """One isotype of indecomposable summands of a module M

    Attributes:
      module: Module: The indecomposable summand
      multiplicity: int: How many copies M contains
      inclusions: tuple[ModuleMap, ...]: One split mono module -> M per copy
      projections: tuple[ModuleMap, ...]: One split epi M -> module per copy,
        with projections[i] ∘ inclusions[j] = δ_ij and Σ inclusions[i] ∘ projections[i] = 1_M
    """
    module: Module
    multiplicity: int
    inclusions: tuple[ModuleMap, ...]
    projections: tuple[ModuleMap, ...]


def _irreducible_factors(f: ModuleMap) -> list[tuple[int, ...]]:
    """The distinct monic irreducible factors of the vertex characteristic polynomials"""
    factors = set()
    for m in f.vertex_mats:
        if m.rows:
            for factor, _ in factor_mod_p(charpoly(m), f.field.p):
                factors.add(tuple(factor))
    return sorted(factors, key=lambda c: (len(c), c))


def _as_matrix(maps: Sequence[ModuleMap], M: Module) -> Mat:
    size = sum(d * d for d in M.dim_vector)
    if not maps:
        return Mat.zeros(M.field, size, 0)
    return Mat(M.field, np.column_stack([f.vector() for f in maps]))


def local_endomorphism_certificate(M: Module) -> bool:
    """Certify that End(M) is local

    The certificate holds when every hom basis element b_i has a single
    eigenvalue λ_i, the shifted elements b_i - λ_i span a subspace N of
    codimension one not containing 1, N is closed under composition and some
    power of N vanishes. Then N is the radical and End(M)/N is the ground field.

    Args:
      M: Module: The module

    Returns:
      bool: True if the certificate was found. False means nothing either way.
    """
    basis = hom_basis(M, M)
    d = len(basis)
    if d == 0:
        return False
    if d == 1:
        return True
    one = identity_map(M)
    shifted = []
    for b in basis:
        factors = _irreducible_factors(b)
        if len(factors) != 1 or len(factors[0]) != 2:
            return False
        eigenvalue = (-factors[0][1]) % M.field.p
        shifted.append(b - one * eigenvalue)
    span = _as_matrix(shifted, M)
    if rank(span) != d - 1 or in_column_space(span, _as_matrix([one], M)):
        return False
    span = image_basis(span)
    elements = [map_from_vector(M, M, span.array[:, c]) for c in range(span.cols)]
    if not in_column_space(span, _as_matrix([a @ b for a in elements for b in elements], M)):
        return False
    power = elements
    for _ in range(d):
        products = _as_matrix([a @ b for a in power for b in elements], M)
        if products.is_zero():
            return True
        reduced = image_basis(products)
        if reduced.cols >= len(power):
            return False
        power = [map_from_vector(M, M, reduced.array[:, c]) for c in range(reduced.cols)]
    return False


def _fitting_split(phi: ModuleMap, factor: Sequence[int]) -> tuple[ModuleMap, ModuleMap]:
    """Split along the generalized kernel of factor(phi) and its complementary image"""
    M = phi.source
    exponent = max(M.dim_vector)
    stable = ModuleMap(M, M, [evaluate(list(factor), m).power(exponent) for m in phi.vertex_mats], check=False)
    parts = map_factorization(stable)
    return parts.mono, parts.kernel


def _idempotent_split(e: ModuleMap) -> tuple[ModuleMap, ModuleMap]:
    parts = map_factorization(e)
    return parts.mono, parts.kernel


def _find_idempotent(M: Module, basis: tuple[ModuleMap, ...], cap: int) -> ModuleMap | None:
    """Exhaustive search for an idempotent other than 0 and 1"""
    p = M.field.p
    d = len(basis)
    vectors = _as_matrix(basis, M).array
    # structure constants: products[:, i, j] is the vector of b_i ∘ b_j
    products = np.stack([np.stack([(a @ b).vector() for b in basis], axis=1) for a in basis], axis=1)
    flat = products.reshape(-1, d)
    one = identity_map(M).vector()
    for coefficients in enumerate_vectors(p, d, cap, "idempotent search"):
        c = np.asarray(coefficients, dtype=np.int64).reshape(-1, 1)
        e = mulmod(vectors, c, p).ravel()
        if not e.any() or np.array_equal(e, one):
            continue
        half = mulmod(flat, c, p).reshape(products.shape[0], d)
        if np.array_equal(mulmod(half, c, p).ravel(), e):
            return map_from_vector(M, M, e)
    return None


def _split_once(M: Module, rng: np.random.Generator, cap: int) -> tuple[ModuleMap, ModuleMap] | None:
    """Either two nonzero submodule inclusions with M = A ⊕ B, or None if M is indecomposable

    Raises:
      DecompositionInconclusiveError: If no split is found and End(M) is too large to enumerate
    """
    basis = hom_basis(M, M)
    d = len(basis)
    if d == 1:
        return None
    for phi in basis:
        factors = _irreducible_factors(phi)
        if len(factors) > 1:
            logger.debug("split %s with a basis endomorphism", M.label)
            return _fitting_split(phi, factors[0])
    if local_endomorphism_certificate(M):
        return None
    for _ in range(RANDOM_TRIALS):
        phi = combine(M, M, rng.integers(0, M.field.p, size=d))
        factors = _irreducible_factors(phi)
        if len(factors) > 1:
            logger.debug("split %s with a random endomorphism", M.label)
            return _fitting_split(phi, factors[0])
    try:
        e = _find_idempotent(M, basis, cap)
    except EnumerationTooLargeError as error:
        raise DecompositionInconclusiveError(
            f"no splitting of {M.label} found in {RANDOM_TRIALS} trials and End has "
            f"{enumeration_size(M.field.p, d)} elements, above the cap {cap}") from error
    if e is None:
        return None
    logger.debug("split %s with an enumerated idempotent", M.label)
    return _idempotent_split(e)


def _indecomposable_pieces(
        M: Module,
        rng: np.random.Generator,
        cap: int,
) -> list[tuple[ModuleMap, ModuleMap]]:
    """Pairs (inclusion, projection) of indecomposable pieces whose sum is M"""
    pieces = []
    pending = [(identity_map(M), identity_map(M))]
    while pending:
        inclusion, projection = pending.pop()
        split = _split_once(inclusion.source, rng, cap)
        if split is None:
            pieces.append((inclusion, projection))
            continue
        first, second = split
        first_projection, second_projection = splitting_projections([first, second])
        pending.append((inclusion @ second, second_projection @ projection))
        pending.append((inclusion @ first, first_projection @ projection))
    return pieces


def is_indecomposable(M: Module, seed: int = 0, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """Whether M is nonzero and has no proper direct summand

    Raises:
      DecompositionInconclusiveError: If the question cannot be settled within the cap
    """
    if M.is_zero():
        return False
    return _split_once(M, seeded_rng(seed, 0), cap) is None


def decompose(M: Module, seed: int = 0, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Summand]:
    """Decompose M into indecomposables, grouped by isomorphism type

    Indecomposability of every piece is certified: a one dimensional End, a
    local endomorphism certificate or an exhaustive idempotent search.

    Args:
      M: Module: The module
      seed: int: (Default value = 0)
        Seed for the random endomorphisms
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The largest End(piece) that may be enumerated

    Returns:
      list[Summand]: The isotypes sorted by dimension then dimension vector

    Raises:
      DecompositionInconclusiveError: If some piece can be neither split nor certified
    """
    if M.is_zero():
        return []
    rng = seeded_rng(seed, 0)
    pieces = _indecomposable_pieces(M, rng, cap)
    if len(pieces) == 1:
        return [Summand(M, 1, (identity_map(M),), (identity_map(M),))]

    groups: list[tuple[Module, list[ModuleMap], list[ModuleMap]]] = []
    for inclusion, projection in pieces:
        piece = inclusion.source
        for representative, inclusions, projections in groups:
            iso = is_isomorphic(representative, piece, seed=seed, cap=cap, indecomposable=True)
            if iso is not None:
                inclusions.append(inclusion @ iso)
                projections.append(iso.inverse() @ projection)
                break
        else:
            groups.append((piece, [inclusion], [projection]))
    summands = [Summand(rep, len(inc), tuple(inc), tuple(proj)) for rep, inc, proj in groups]
    summands.sort(key=lambda s: (s.module.dimension, s.module.dim_vector))
    logger.debug("%s decomposes as %s", M.label,
                 [(list(s.module.dim_vector), s.multiplicity) for s in summands])
    return summands


def _search_isomorphism(M: Module, N: Module, candidates) -> ModuleMap | None:
    for f in candidates:
        if f.is_isomorphism():
            return f
    return None


def _isomorphism_from_decompositions(M: Module, N: Module, seed: int, cap: int) -> ModuleMap | None:
    """Match the summands of M and N one isotype at a time"""
    left, right = decompose(M, seed, cap), decompose(N, seed, cap)
    if len(left) != len(right):
        return None
    unmatched = list(right)
    result = zero_map(M, N)
    for summand in left:
        for other in unmatched:
            if other.multiplicity != summand.multiplicity:
                continue
            iso = is_isomorphic(summand.module, other.module, seed=seed, cap=cap, indecomposable=True)
            if iso is None:
                continue
            for inclusion, projection in zip(other.inclusions, summand.projections):
                result = result + inclusion @ iso @ projection
            unmatched.remove(other)
            break
        else:
            return None
    return result


def is_isomorphic(
        M: Module,
        N: Module,
        seed: int = 0,
        cap: int = DEFAULT_ENUMERATION_CAP,
        indecomposable: bool | None = None,
) -> ModuleMap | None:
    """An isomorphism M -> N, or None if there is none

    A None answer is always exact. When End(M) is local some hom basis element
    of Hom(M, N) is already an isomorphism if any is, so scanning the basis
    decides. Otherwise random combinations are tried, then the two
    decompositions are compared summand by summand.

    Args:
      M: Module: The source
      N: Module: The target
      seed: int: (Default value = 0)
        Seed for the random trials
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The largest enumeration allowed
      indecomposable: bool | None: (Default value = None)
        True if the caller knows M is indecomposable

    Returns:
      ModuleMap | None: An invertible map, or None

    Raises:
      IsoInconclusiveError: If neither a witness nor a proof of absence is found
    """
    if M.algebra is not N.algebra:
        raise ValueError(f"{M.label} and {N.label} are modules over different algebras")
    if M.dim_vector != N.dim_vector:
        return None
    if M.is_zero():
        return zero_map(M, N)
    basis = hom_basis(M, N)
    found = _search_isomorphism(M, N, basis)
    if found is not None:
        return found
    h = len(basis)
    if not (h == len(hom_basis(M, M)) == len(hom_basis(N, N)) == len(hom_basis(N, M))):
        return None
    if indecomposable or (indecomposable is None and local_endomorphism_certificate(M)):
        return None

    rng = seeded_rng(seed, 1)
    trials = (combine(M, N, rng.integers(0, M.field.p, size=h)) for _ in range(RANDOM_TRIALS))
    found = _search_isomorphism(M, N, trials)
    if found is not None:
        return found
    try:
        return _isomorphism_from_decompositions(M, N, seed, cap)
    except DecompositionInconclusiveError as error:
        logger.debug("decomposition inconclusive for %s, enumerating Hom", M.label)
        if enumeration_size(M.field.p, h) > cap:
            raise IsoInconclusiveError(
                f"could not decide whether {M.label} and {N.label} are isomorphic: {error}") from error
    everything = (combine(M, N, c) for c in enumerate_vectors(M.field.p, h, cap, "isomorphism search"))
    return _search_isomorphism(M, N, everything)


def in_add(
        M: Module,
        generators: Sequence[Module],
        seed: int = 0,
        cap: int = DEFAULT_ENUMERATION_CAP,
) -> dict[int, int] | None:
    """Whether M lies in add(generators), and with which summands

    Args:
      M: Module: The module
      generators: Sequence[Module]: Pairwise non-isomorphic indecomposables
      seed: int: (Default value = 0)
        Seed for decomposition
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The enumeration cap

    Returns:
      dict[int, int] | None: Multiplicities keyed by generator index, or None if
        some summand of M matches no generator
    """
    counts: dict[int, int] = {}
    for summand in decompose(M, seed, cap):
        for k, generator in enumerate(generators):
            if is_isomorphic(summand.module, generator, seed=seed, cap=cap, indecomposable=True) is not None:
                counts[k] = counts.get(k, 0) + summand.multiplicity
                break
        else:
            logger.debug("summand %s of %s is not in add", list(summand.module.dim_vector), M.label)
            return None
    return dict(sorted(counts.items()))
