from __future__ import annotations

import logging
from typing import Any

from ..approximations import almost_minimalize, ext_class_representative, n_kernel_in, right_approx, right_minimalize
from ..homology import ext_group, ext_induced_map
from ..linalg import rank
from ..modules import Module, Subcat
from ..shared import (
    DEFAULT_ENUMERATION_CAP,
    ApproxNotSurjectiveError,
    CheckReport,
    DecompositionInconclusiveError,
    EnumerationTooLargeError,
    IsoInconclusiveError,
    MinimalityInconclusiveError,
    NKernelEscapesMError,
    RepresentativeEscapesMError,
    Verdict,
    projective_points,
)
from .cluster_tilting import is_nZ
from .cotorsion import is_in_X_exact_n

logger = logging.getLogger(__name__)


def is_left_closed_under_n_extensions(
        X: Subcat,
        Msub: Subcat,
        n: int,
        seed: int = 0,
        cap: int = DEFAULT_ENUMERATION_CAP,
) -> CheckReport:
    """Whether m_n lies in add(X) for every almost minimal 0 -> x -> m_n -> ... -> m_1 -> x′ -> 0

    Every nonzero class of Ext^n(x′, x) for generators x, x′ of X is
    enumerated up to scalars, which give the same middle terms. Each class
    gets a representative with middle terms in add(Msub), is made almost
    minimal and its term next to x is tested.

    Args:
      X: Subcat: The subcategory tested
      Msub: Subcat: The ambient cluster tilting subcategory
      n: int: The length parameter
      seed: int: (Default value = 0)
        Seed for the decompositions
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The largest Ext^n group enumerated

    Returns:
      CheckReport: Pass, Fail with the offending sequence, or Inconclusive
        when some class has no representative inside add(Msub)

    Raises:
      EnumerationTooLargeError: If some Ext^n(x′, x) has more than cap elements
    """
    check = "is_left_closed_under_n_extensions"
    scope = f"every Ext^{n} class between generators of X"
    classes: dict[str, int] = {}
    escaped = []
    for x in X:
        for x_prime in X:
            group = ext_group(x_prime, x, n)
            count = 0
            for coefficients in projective_points(x.field.p, group.dim, cap, f"Ext^{n}({x_prime.label}, {x.label})"):
                count += 1
                try:
                    s = ext_class_representative(Msub, x_prime, x, n, group.representative(coefficients), cap)
                    s = almost_minimalize(s, seed, cap)
                except RepresentativeEscapesMError as e:
                    escaped.append({"left": x.label, "right": x_prime.label, "class": list(coefficients),
                                    "reason": str(e)})
                    continue
                middle = s.module(n)
                if not middle.is_zero() and X.in_add(middle) is None:
                    counterexample = {
                        "left": x.label,
                        "right": x_prime.label,
                        "class": list(coefficients),
                        "middle_term": list(middle.dim_vector),
                        "sequence": [list(t.dim_vector) for t in s.modules],
                    }
                    return CheckReport(check, Verdict.FAIL, scope, {"classes": classes}, counterexample, seed)
            classes[f"Ext^{n}({x_prime.label}, {x.label})"] = count
    certificate: dict[str, Any] = {"classes": classes}
    if escaped:
        logger.warning("%d classes have no representative in the subcategory", len(escaped))
        return CheckReport(check, Verdict.INCONCLUSIVE, scope, certificate, {"escaped": escaped}, seed)
    return CheckReport(check, Verdict.PASS, scope, certificate, None, seed)


def wakamatsu_check(
        X: Subcat,
        Msub: Subcat,
        m: Module,
        n: int,
        seed: int = 0,
        cap: int = DEFAULT_ENUMERATION_CAP,
) -> CheckReport:
    """Check that the n-kernel of a surjective add(X)-cover of m lies in X-exact_n

    The hypotheses are verified first: add(Msub) closed under n-syzygies and
    add(X) left closed under n-extensions. Under them the conclusion always
    holds, so a Fail is logged as an error. The injectivity of
    Ext^n(x′, x) -> Ext^n(x′, m) along the cover, used on the way, is
    recorded too.

    Args:
      X: Subcat: The covering subcategory
      Msub: Subcat: An nZ cluster tilting subcategory
      m: Module: The module covered
      n: int: The length parameter
      seed: int: (Default value = 0)
        Seed for the decompositions
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The enumeration cap

    Returns:
      CheckReport: NotApplicable when a hypothesis fails or there is no
        surjective cover, Pass when the conclusion holds
    """
    check = "wakamatsu_check"
    try:
        closed = is_nZ(Msub, n, 1, seed)
        left_closed = is_left_closed_under_n_extensions(X, Msub, n, seed, cap)
    except EnumerationTooLargeError as e:
        return CheckReport(check, Verdict.INCONCLUSIVE, "hypotheses", {}, {"reason": str(e)}, seed)
    hypotheses = {"is_nZ": closed.verdict.value, "left_closed": left_closed.verdict.value}
    if not (closed.passed and left_closed.passed):
        return CheckReport(check, Verdict.NOT_APPLICABLE, "hypotheses", hypotheses, None, seed)
    try:
        cover = right_minimalize(right_approx(X, m, force_epi=True), cap, strict=True)
    except MinimalityInconclusiveError as e:
        return CheckReport(check, Verdict.INCONCLUSIVE, "cover", hypotheses, {"reason": str(e)}, seed)
    if not cover.surjective:
        return CheckReport(check, Verdict.NOT_APPLICABLE, "cover", hypotheses,
                           {"module": m.label, "reason": "no surjective add(X)-cover"}, seed)
    try:
        s = n_kernel_in(Msub, cover.map, n, cap)
    except (ApproxNotSurjectiveError, NKernelEscapesMError, DecompositionInconclusiveError,
            IsoInconclusiveError) as e:
        return CheckReport(check, Verdict.INCONCLUSIVE, "n-kernel", hypotheses, {"reason": str(e)}, seed)
    monomorphisms = {}
    for x_prime in X:
        along = ext_induced_map(x_prime, cover.map, n)
        monomorphisms[x_prime.label] = rank(along) == along.cols
    conclusion = is_in_X_exact_n(X, s.tail(), n, seed)
    certificate = {
        "hypotheses": hypotheses,
        "cover": cover.to_dict(),
        "tail": s.tail().label,
        "ext_monomorphism": monomorphisms,
        "conclusion": conclusion.certificate,
    }
    if not conclusion.passed or not all(monomorphisms.values()):
        logger.error("the n-kernel of the cover of %s contradicts left closure: %r", m.label, conclusion.counterexample)
        return CheckReport(check, Verdict.FAIL, conclusion.scope, certificate,
                           dict(conclusion.counterexample or {}, alarm=True), seed)
    return CheckReport(check, Verdict.PASS, conclusion.scope, certificate, None, seed)
