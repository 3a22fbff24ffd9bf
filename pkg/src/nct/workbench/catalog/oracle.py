from __future__ import annotations

import itertools
import logging

from ..algebra import injective_modules, projective_modules
from ..checks import Universe, is_n_cluster_tilting
from ..modules import Subcat
from ..shared import DEFAULT_ENUMERATION_CAP, UniverseTooLargeError, Verdict

logger = logging.getLogger(__name__)

# largest universe searched at all, and largest searched without the projective-injective constraint
MAX_SEARCH = 20
MAX_UNCONSTRAINED = 12


def _candidate(U: Universe, indices: tuple[int, ...]) -> Subcat:
    return Subcat([U[k] for k in indices], name=f"add({'⊕'.join(U[k].label for k in indices)})")


def _required(U: Universe, seed: int, cap: int) -> set[int]:
    """Indices of the indecomposable projectives and injectives"""
    required = set()
    for m in projective_modules(U.algebra) + injective_modules(U.algebra):
        k = U.index_of(m, seed, cap)
        if k is None:
            raise ValueError(f"{m.label} is missing from the complete universe {U!r}")
        required.add(k)
    return required


def _passes(U: Universe, indices: tuple[int, ...], n: int, seed: int, cap: int) -> bool:
    report = is_n_cluster_tilting(U, _candidate(U, indices), n, seed, cap)
    if report.verdict is Verdict.INCONCLUSIVE:
        logger.warning("candidate %s is inconclusive", [U[k].label for k in indices])
    return report.verdict is Verdict.PASS


def brute_force_nct_search(U: Universe, n: int, seed: int = 0, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Subcat]:
    """Every n-cluster tilting subcategory, by exhaustive search over subsets of U

    Only subsets containing every indecomposable projective and injective can
    generate and cogenerate. Those are searched first; for small universes
    the remaining subsets are searched too, which must add nothing.

    Args:
      U: Universe: A complete universe
      n: int: The cluster tilting degree
      seed: int: (Default value = 0)
        Seed for the membership tests
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The enumeration cap

    Returns:
      list[Subcat]: The hits, ordered by size and then by position in U

    Raises:
      UniverseTooLargeError: If U has more than 20 modules
      ValueError: If U is not complete
    """
    if not U.is_complete:
        raise ValueError(f"the search needs a complete universe, got {U!r}")
    if len(U) > MAX_SEARCH:
        raise UniverseTooLargeError(f"{len(U)} indecomposables, the search handles at most {MAX_SEARCH}")
    required = _required(U, seed, cap)
    optional = [k for k in range(len(U)) if k not in required]
    hits = []
    for r in range(len(optional) + 1):
        for extra in itertools.combinations(optional, r):
            indices = tuple(sorted(required.union(extra)))
            if _passes(U, indices, n, seed, cap):
                hits.append(indices)
    logger.info("%d of %d constrained candidates are %d-cluster tilting", len(hits), 2 ** len(optional), n)

    if len(U) <= MAX_UNCONSTRAINED:
        for r in range(1, len(U) + 1):
            for indices in itertools.combinations(range(len(U)), r):
                if required.issubset(indices):
                    continue
                if _passes(U, indices, n, seed, cap):
                    logger.error("%s is %d-cluster tilting without every projective and injective",
                                 [U[k].label for k in indices], n)
                    hits.append(indices)

    hits.sort(key=lambda indices: (len(indices), indices))
    return [_candidate(U, indices) for indices in hits]
