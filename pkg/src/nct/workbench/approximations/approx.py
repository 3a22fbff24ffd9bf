from __future__ import annotations

import logging
from dataclasses import replace

from ..algebra import projective_modules
from ..linalg import Mat, kernel_basis
from ..modules import (
    Module,
    ModuleMap,
    Subcat,
    column_map,
    combine,
    direct_sum,
    factor_before,
    factor_through,
    hom_basis,
    hom_functor_matrix,
    identity_map,
    row_map,
)
from ..shared import (
    DEFAULT_ENUMERATION_CAP,
    MinimalityInconclusiveError,
    enumerate_vectors,
    enumeration_size,
)
from .ApproxResult import ApproxResult

logger = logging.getLogger(__name__)


def _build(C: Subcat, m: Module, summands: list[int], components: list[ModuleMap], left: bool) -> ApproxResult:
    parts = direct_sum([C[k] for k in summands], algebra=m.algebra)
    if left:
        phi = column_map(parts, components, m)
    else:
        phi = row_map(parts, components, m)
    return ApproxResult(phi, C, tuple(summands), parts, left=left)


def contains_projectives(C: Subcat, algebra) -> bool:
    return all(P.is_zero() or C.in_add(P) is not None for P in projective_modules(algebra))


def right_approx(C: Subcat, m: Module, force_epi: bool = False) -> ApproxResult:
    """The evaluation map ⊕_g g^{dim Hom(g, m)} -> m, a right add(C)-approximation

    Every basis hom g -> m is the restriction of the map to its own summand,
    so every map from add(C) factors.

    Args:
      C: Subcat: The subcategory
      m: Module: The module to approximate
      force_epi: bool: (Default value = False)
        Ask for a surjective approximation. When C contains the projectives
        the evaluation map is already surjective, so a non-surjective result
        is only reported in the note.

    Returns:
      ApproxResult: The approximation, not yet minimal
    """
    summands, components = [], []
    for k, g in enumerate(C):
        for h in hom_basis(g, m):
            summands.append(k)
            components.append(h)
    result = _build(C, m, summands, components, left=False)
    if force_epi and not result.surjective:
        logger.info("no surjective add(%s)-approximation of %s", ", ".join(C.labels), m.label)
        result = result.with_note("not surjective: the subcategory does not generate this module")
    return result


def left_approx(C: Subcat, m: Module) -> ApproxResult:
    """The coevaluation map m -> ⊕_g g^{dim Hom(m, g)}, a left add(C)-approximation"""
    summands, components = [], []
    for k, g in enumerate(C):
        for h in hom_basis(m, g):
            summands.append(k)
            components.append(h)
    return _build(C, m, summands, components, left=True)


def _strip(r: ApproxResult) -> ApproxResult:
    """Drop summands whose component factors through the others until none does"""
    summands = list(r.summands)
    components = r.components()
    m = r.approximated
    k = 0
    while k < len(summands):
        others = [j for j in range(len(summands)) if j != k]
        rest = _build(r.subcat, m, [summands[j] for j in others], [components[j] for j in others], r.left)
        if r.left:
            redundant = factor_before(components[k], rest.map) is not None
        else:
            redundant = factor_through(components[k], rest.map) is not None
        if redundant:
            logger.debug("dropping summand %s of the approximation of %s", r.subcat[summands[k]].label, m.label)
            del summands[k]
            del components[k]
            k = 0
        else:
            k += 1
    return _build(r.subcat, m, summands, components, r.left)


def _verify_minimal(r: ApproxResult, cap: int) -> bool | None:
    """Whether every endomorphism ψ of x with φψ = φ (or ψφ = φ) is invertible

    Such ψ are 1 + ν with ν in the kernel of Hom(x, φ) (or Hom(φ, x)), which
    is enumerated. None when the kernel is too large.
    """
    x = r.module
    if x.is_zero():
        return True
    matrix = hom_functor_matrix(x, r.map, covariant=not r.left)
    nulls = kernel_basis(matrix)
    p = x.field.p
    if enumeration_size(p, nulls.cols) > cap:
        return None
    one = identity_map(x)
    for vector in enumerate_vectors(p, nulls.cols, cap, "minimality check"):
        if not any(vector):
            continue
        coefficients = (nulls @ Mat.column_vector(x.field, vector)).entries
        if not (one + combine(x, x, coefficients)).is_isomorphism():
            return False
    return True


def _minimalize(r: ApproxResult, cap: int, strict: bool) -> ApproxResult:
    stripped = replace(_strip(r), note=r.note)
    verified = _verify_minimal(stripped, cap)
    if verified is None:
        if strict:
            raise MinimalityInconclusiveError(
                f"cannot verify minimality of the approximation of {r.approximated.label} within the cap {cap}")
        logger.warning("minimality of the approximation of %s not verified", r.approximated.label)
        return stripped.with_note("minimality not verified: endomorphism space above the cap")
    if not verified:
        logger.error("stripped approximation of %s is not minimal", r.approximated.label)
        return stripped.with_note("stripping did not reach a minimal approximation")
    return replace(stripped, minimal=True)


def right_minimalize(r: ApproxResult, cap: int = DEFAULT_ENUMERATION_CAP, strict: bool = True) -> ApproxResult:
    """Strip a right approximation down to a right minimal one, and verify it

    A summand is dropped while its component factors through the remaining
    components. When no summand can be dropped the approximation is right
    minimal; this is confirmed by checking that every ψ with φψ = φ is
    invertible, over all such ψ.

    Args:
      r: ApproxResult: A right approximation
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The largest verification space enumerated
      strict: bool: (Default value = True)
        Raise when verification is above the cap, instead of returning minimal=False

    Returns:
      ApproxResult: The minimal approximation, with minimal=True when verified

    Raises:
      MinimalityInconclusiveError: If strict and the verification space is above the cap
    """
    if r.left:
        raise ValueError("right_minimalize needs a right approximation")
    return _minimalize(r, cap, strict)


def left_minimalize(r: ApproxResult, cap: int = DEFAULT_ENUMERATION_CAP, strict: bool = True) -> ApproxResult:
    """The dual of right_minimalize for left approximations"""
    if not r.left:
        raise ValueError("left_minimalize needs a left approximation")
    return _minimalize(r, cap, strict)


def minimal_right_approx(C: Subcat, m: Module, cap: int = DEFAULT_ENUMERATION_CAP) -> ApproxResult:
    return right_minimalize(right_approx(C, m), cap, strict=False)


def minimal_left_approx(C: Subcat, m: Module, cap: int = DEFAULT_ENUMERATION_CAP) -> ApproxResult:
    return left_minimalize(left_approx(C, m), cap, strict=False)
