from __future__ import annotations

import logging
from typing import Any

from ..algebra import projective_modules
from ..approximations import (
    NSequence,
    ext_class_representative,
    is_n_cokernel,
    is_n_exact,
    is_n_kernel,
    n_cokernel_in,
    n_kernel_in,
    right_approx,
    right_minimalize,
)
from ..homology import ext_group
from ..modules import ModuleMap, Subcat, combine, hom_basis, map_factorization
from ..shared import (
    DEFAULT_ENUMERATION_CAP,
    ApproxNotSurjectiveError,
    CheckReport,
    DecompositionInconclusiveError,
    EnumerationTooLargeError,
    IsoInconclusiveError,
    NCokernelEscapesMError,
    NKernelEscapesMError,
    NotCoveringError,
    RepresentativeEscapesMError,
    Verdict,
    combine_verdicts,
    enumerate_vectors,
    projective_points,
)
from .Universe import Universe
from .cotorsion import is_in_X_exact_n

logger = logging.getLogger(__name__)

_CONSTRUCTION_ERRORS = (
    ApproxNotSurjectiveError,
    NKernelEscapesMError,
    NCokernelEscapesMError,
    DecompositionInconclusiveError,
    IsoInconclusiveError,
)


def _n_kernel_of(C: Subcat, f: ModuleMap, n: int, cap: int) -> NSequence:
    """0 -> k_n -> ... -> k_1 -> w -> w′ for any f: w -> w′, built in add(C)"""
    s = n_kernel_in(C, map_factorization(f).coimage, n, cap)
    return NSequence(n, s.modules[:-1] + (f.target,), s.maps[:-1] + (f,))


def _n_cokernel_of(C: Subcat, f: ModuleMap, n: int, cap: int) -> NSequence:
    """w -> w′ -> c_1 -> ... -> c_n -> 0 for any f: w -> w′, built in add(C)"""
    s = n_cokernel_in(C, map_factorization(f).mono, n, cap)
    return NSequence(n, (f.source,) + s.modules[1:], (f,) + s.maps[1:])


def _escaping_term(W: Subcat, terms) -> str | None:
    for t in terms:
        if not t.is_zero() and W.in_add(t) is None:
            return str(list(t.dim_vector))
    return None


def _realize(W: Subcat, Msub: Subcat, f: ModuleMap, n: int, kernel_side: bool, seed: int, cap: int) -> dict | None:
    """None when f has an n-kernel (n-cokernel) in add(Msub) with the new terms in add(W)

    The construction is first run with add(W)-approximations and accepted
    when the result is an n-kernel in add(Msub). Otherwise the minimal one
    built in add(Msub) is tested; it lies in add(W) if any does, as add(W)
    is closed under summands.
    """
    build, certify = (_n_kernel_of, is_n_kernel) if kernel_side else (_n_cokernel_of, is_n_cokernel)
    side = "n-kernel" if kernel_side else "n-cokernel"
    try:
        s = build(W, f, n, cap)
        if certify(Msub, s, seed).passed:
            return None
    except _CONSTRUCTION_ERRORS:
        logger.debug("%s of %r not built with add(W)-approximations", side, f)
    try:
        s = build(Msub, f, n, cap)
    except _CONSTRUCTION_ERRORS as e:
        return {"side": side, "reason": str(e), "conclusive": False}
    new_terms = s.modules[:n] if kernel_side else s.modules[2:]
    escaped = _escaping_term(W, new_terms)
    if escaped is None:
        return None
    return {"side": side, "term": escaped, "conclusive": True}


def is_wide(W: Subcat, Msub: Subcat, n: int, seed: int = 0, cap: int = DEFAULT_ENUMERATION_CAP) -> CheckReport:
    """Whether add(W) is a wide subcategory of add(Msub)

    Every morphism between generators of W, enumerated exhaustively, must
    have an n-kernel and an n-cokernel with all terms in add(W). Every
    nonzero class of Ext^n between generators of W must have a
    representative with all terms in add(W); this is existential, so a
    failed construction is Inconclusive rather than Fail.

    Args:
      W: Subcat: The candidate
      Msub: Subcat: The ambient cluster tilting subcategory
      n: int: The length parameter
      seed: int: (Default value = 0)
        Seed for the membership tests
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The largest Hom space or Ext group enumerated

    Returns:
      CheckReport: The verdict with counts of morphisms and classes checked

    Raises:
      EnumerationTooLargeError: If some Hom space or Ext group is above the cap
    """
    check = "is_wide"
    scope = "all morphisms and Ext^n classes between generators of W"
    morphisms = 0
    unresolved = []
    for w in W:
        for w_prime in W:
            basis = hom_basis(w, w_prime)
            for coefficients in enumerate_vectors(w.field.p, len(basis), cap, f"Hom({w.label}, {w_prime.label})"):
                f = combine(w, w_prime, coefficients)
                morphisms += 1
                for kernel_side in (True, False):
                    failure = _realize(W, Msub, f, n, kernel_side, seed, cap)
                    if failure is None:
                        continue
                    failure.update(source=w.label, target=w_prime.label, morphism=list(coefficients))
                    if failure.pop("conclusive"):
                        return CheckReport(check, Verdict.FAIL, scope, {"morphisms": morphisms},
                                           dict(failure, condition="n-kernels and n-cokernels"), seed)
                    unresolved.append(failure)
    classes = 0
    for w in W:
        for w_prime in W:
            group = ext_group(w_prime, w, n)
            for coefficients in projective_points(w.field.p, group.dim, cap, f"Ext^{n}({w_prime.label}, {w.label})"):
                classes += 1
                entry = {"left": w.label, "right": w_prime.label, "class": list(coefficients),
                         "condition": "Yoneda representatives"}
                try:
                    s = ext_class_representative(W, w_prime, w, n, group.representative(coefficients), cap)
                except (RepresentativeEscapesMError, ValueError) as e:
                    unresolved.append(dict(entry, reason=str(e)))
                    continue
                if not is_n_exact(Msub, s, seed).passed:
                    unresolved.append(dict(entry, reason="representative is not n-exact in M"))
    certificate = {"morphisms": morphisms, "classes": classes}
    if unresolved:
        return CheckReport(check, Verdict.INCONCLUSIVE, scope, certificate, {"unresolved": unresolved}, seed)
    return CheckReport(check, Verdict.PASS, scope, certificate, None, seed)


def wide_implies_cotorsion_experiment(
        W: Subcat,
        Msub: Subcat,
        U: Universe,
        n: int,
        seed: int = 0,
        cap: int = DEFAULT_ENUMERATION_CAP,
) -> CheckReport:
    """Certify that a covering wide subcategory with the projectives is n-cotorsion

    Every member of U in add(Msub) gets a surjective minimal
    add(W)-approximation, and the tail of its n-kernel must lie in
    W-exact_n. Together this makes W n-special precovering, hence
    n-cotorsion.

    Args:
      W: Subcat: A wide subcategory
      Msub: Subcat: The ambient nZ cluster tilting subcategory
      U: Universe: The modules to cover
      n: int: The length parameter
      seed: int: (Default value = 0)
        Seed for the membership tests
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The enumeration cap

    Returns:
      CheckReport: Fail with the missing projective, otherwise the verdict on
        the precover tails; the wideness verdict is recorded alongside

    Raises:
      NotCoveringError: If some module has no surjective add(W)-approximation
    """
    check = "wide_implies_cotorsion_experiment"
    for P in projective_modules(Msub.algebra):
        if W.in_add(P) is None:
            return CheckReport(check, Verdict.FAIL, "W must contain the projectives", {},
                               {"precondition": "contains projectives", "witness": P.label}, seed)
    try:
        wide = is_wide(W, Msub, n, seed, cap).verdict.value
    except EnumerationTooLargeError as e:
        wide = str(e)
    covers: dict[str, Any] = {}
    verdicts = []
    for m in U.members_of(Msub):
        cover = right_minimalize(right_approx(W, m, force_epi=True), cap, strict=False)
        if not cover.surjective:
            raise NotCoveringError(f"add({', '.join(W.labels)}) has no surjection onto {m.label}", m.label)
        tail = is_in_X_exact_n(W, n_kernel_in(Msub, cover.map, n, cap).tail(), n, seed)
        covers[m.label] = {"cover": cover.to_dict(), "tail": tail.certificate, "verdict": tail.verdict.value}
        verdicts.append(tail.verdict)
        if not tail.passed:
            logger.error("tail of the cover of %s is not W-exact_n for a wide W", m.label)
            return U.finalize(CheckReport(check, Verdict.FAIL, "", {"covers": covers},
                                          dict(tail.counterexample or {}, module=m.label), seed))
    certificate = {"covers": covers, "is_wide": wide, "certified_via": "covering subcategory with n-special precovers"}
    return U.finalize(CheckReport(check, combine_verdicts(verdicts), "", certificate, None, seed))
