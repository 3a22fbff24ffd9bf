from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Any

from ..algebra import injective_modules, projective_modules
from ..approximations import (
    NSequence,
    Tail,
    contains_projectives,
    n_kernel_in,
    right_approx,
    right_minimalize,
)
from ..homology import ext_dim, ext_ladder, syzygy
from ..modules import Module, Subcat, kernel
from ..shared import (
    DEFAULT_ENUMERATION_CAP,
    ApproxNotSurjectiveError,
    CheckReport,
    DecompositionInconclusiveError,
    IsoInconclusiveError,
    NKernelEscapesMError,
    Verdict,
    combine_verdicts,
)
from .Universe import Universe
from .cluster_tilting import is_nZ

logger = logging.getLogger(__name__)

THEOREM = "theorem"
RELATIVE = "relative"


def is_in_X_exact_n(X: Subcat, tail: Tail, n: int, seed: int = 0) -> CheckReport:
    """Whether 0 -> Ext^n(x, r_n) -> ... -> Ext^n(x, r_1) -> 0 is exact for every x in add(X)

    Ext is additive, so the generators of X suffice.

    Args:
      X: Subcat: The subcategory
      tail: Tail: r_n -> ... -> r_1
      n: int: The Ext degree
      seed: int: (Default value = 0)
        Recorded in the report

    Returns:
      CheckReport: Pass, or Fail naming the generator and the spot
    """
    check = "is_in_X_exact_n"
    scope = f"generators of add({', '.join(X.labels)})"
    ladders = {}
    for x in X:
        ladder = ext_ladder(x, tail.maps, n, tail.modules)
        ladders[x.label] = list(ladder.dims)
        reason = ladder.failure()
        if reason is not None:
            return CheckReport(check, Verdict.FAIL, scope, {"tail": tail.label, "ladders": ladders},
                               {"generator": x.label, "tail": tail.label, "reason": reason}, seed)
    return CheckReport(check, Verdict.PASS, scope, {"tail": tail.label, "ladders": ladders}, None, seed)


def left_perp_of_family(Msub: Subcat, F: Sequence[Tail], n: int) -> Subcat:
    """add of the generators of Msub with an exact degree-n ladder against every tail of F"""
    kept = [g for g in Msub if all(ext_ladder(g, t.maps, n, t.modules).is_exact() for t in F)]
    return Subcat(kept, name=f"⊥F in {Msub.name}" if Msub.name else "⊥F", seed=Msub.seed, cap=Msub.cap)


def n_special_precover(
        X: Subcat,
        Msub: Subcat,
        m: Module,
        n: int,
        seed: int = 0,
        cap: int = DEFAULT_ENUMERATION_CAP,
) -> tuple[NSequence, CheckReport]:
    """An n-special add(X)-precover 0 -> r_n -> ... -> r_1 -> x -> m -> 0 of m

    The precover is a minimal surjective right add(X)-approximation, the
    rest is its n-kernel in add(Msub), and the tail r_n -> ... -> r_1 is
    certified to lie in X-exact_n. The approximation property is rechecked
    on every generator hom.

    Args:
      X: Subcat: The precovering subcategory
      Msub: Subcat: The ambient cluster tilting subcategory
      m: Module: A module in add(Msub)
      n: int: The length parameter
      seed: int: (Default value = 0)
        Recorded in the report
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The enumeration cap

    Returns:
      tuple[NSequence, CheckReport]: The sequence and its certification

    Raises:
      ApproxNotSurjectiveError: If add(X) has no surjection onto m
      NKernelEscapesMError: If the n-kernel leaves add(Msub)
    """
    approximation = right_minimalize(right_approx(X, m, force_epi=True), cap, strict=False)
    if not approximation.surjective:
        raise ApproxNotSurjectiveError(f"no surjection from add({', '.join(X.labels)}) onto {m.label}", m.label)
    s = n_kernel_in(Msub, approximation.map, n, cap)
    tail = is_in_X_exact_n(X, s.tail(), n, seed)
    failure = approximation.failure()
    certificate = {
        "module": m.label,
        "approximation": approximation.to_dict(),
        "sequence": [list(t.dim_vector) for t in s.modules],
        "tail": tail.certificate,
        "precover_rechecked": failure is None,
    }
    if failure is not None:
        logger.error("approximation of %s fails the recheck: %s", m.label, failure)
        return s, CheckReport("n_special_precover", Verdict.FAIL, tail.scope, certificate,
                              {"module": m.label, "reason": failure}, seed)
    return s, CheckReport("n_special_precover", tail.verdict, tail.scope, certificate, tail.counterexample, seed)


def _precover_attempt(X: Subcat, Msub: Subcat, m: Module, n: int, seed: int, cap: int):
    """n_special_precover with its diagnostic errors turned into a report"""
    try:
        return n_special_precover(X, Msub, m, n, seed, cap)
    except (ApproxNotSurjectiveError, NKernelEscapesMError) as e:
        return None, CheckReport("n_special_precover", Verdict.FAIL, "", {"module": m.label},
                                 {"module": m.label, "reason": str(e)}, seed)


def _theorem_strategy(X: Subcat, Msub: Subcat, n: int, seed: int, cap: int) -> CheckReport:
    check = "is_n_cotorsion"
    precovers = {}
    for g in Msub:
        _, report = _precover_attempt(X, Msub, g, n, seed, cap)
        precovers[g.label] = report.to_dict()
        if not report.passed:
            certificate = {"strategy": THEOREM, "precovers": precovers}
            return CheckReport(check, Verdict.INCONCLUSIVE, "n-special precovers of the generators", certificate,
                               {"module": g.label, "reason": "no certified n-special precover",
                                "detail": report.counterexample}, seed)
    certificate = {
        "strategy": THEOREM,
        "certified_via": "n-special precovering and closed under summands",
        "precovers": precovers,
    }
    return CheckReport(check, Verdict.PASS, "all of add(M) through n-special precovers", certificate, None, seed)


def _relative_strategy(
        X: Subcat,
        Msub: Subcat,
        U: Universe,
        n: int,
        tails: Sequence[Tail],
        seed: int,
        cap: int,
) -> CheckReport:
    check = "is_n_cotorsion"
    family: list[Tail] = []
    rejected = []
    origins = []
    for u in U.members_of(Msub):
        s, report = _precover_attempt(X, Msub, u, n, seed, cap)
        if s is not None and report.passed:
            family.append(s.tail())
            origins.append(f"precover of {u.label}")
    if n == 1:
        family.append(Tail.zero(n, Msub.algebra))
        origins.append("zero")
    for g in Msub:
        for i in range(2, n + 1):
            family.append(Tail.identity(n, g, i))
            origins.append(f"contractible {g.label} at {i}")
    for t in tails:
        if is_in_X_exact_n(X, t, n, seed).passed:
            family.append(t)
            origins.append(f"given {t.label}")
        else:
            rejected.append(t.label)
    perp = left_perp_of_family(Msub, family, n)
    certificate: dict[str, Any] = {
        "strategy": RELATIVE,
        "family": [f"{origin}: {t.label}" for origin, t in zip(origins, family)],
        "rejected_tails": rejected,
        "perp": perp.labels,
    }
    scope = f"relative to a family of {len(family)} certified X-exact_n tails"
    for x in X:
        if perp.index_of(x) is None:
            witness = next(t for t in family if not ext_ladder(x, t.maps, n, t.modules).is_exact())
            logger.error("%s in X is not left perpendicular to the X-exact_n tail %s", x.label, witness.label)
            return CheckReport(check, Verdict.FAIL, scope, certificate,
                               {"generator": x.label, "tail": witness.label,
                                "reason": "a generator of X is not left perpendicular to an X-exact_n tail"}, seed)
    extra = [g.label for g in perp if X.index_of(g) is None]
    if extra:
        return CheckReport(check, Verdict.INCONCLUSIVE, scope, certificate,
                           {"extra": extra, "reason": "the perpendicular of the family is larger than X"}, seed)
    return CheckReport(check, Verdict.PASS_RELATIVE, scope, certificate, None, seed)


def is_n_cotorsion(
        X: Subcat,
        Msub: Subcat,
        U: Universe,
        n: int,
        strategy: str = THEOREM,
        tails: Sequence[Tail] = (),
        seed: int = 0,
        cap: int = DEFAULT_ENUMERATION_CAP,
) -> CheckReport:
    """Whether add(X) is an n-cotorsion class in add(Msub)

    The theorem strategy certifies n-cotorsion by building a certified
    n-special precover of every generator of Msub. The relative strategy
    compares X with the left perpendicular of a finite family of certified
    X-exact_n tails, which can refute but only relatively confirm.

    Args:
      X: Subcat: The candidate class
      Msub: Subcat: The ambient cluster tilting subcategory
      U: Universe: Supplies the modules whose precovers feed the relative family
      n: int: The length parameter
      strategy: str: (Default value = "theorem")
        "theorem" or "relative"
      tails: Sequence[Tail]: (Default value = ())
        Extra tails for the relative family, kept only when certified
      seed: int: (Default value = 0)
        Seed for the membership tests
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The enumeration cap

    Returns:
      CheckReport: The verdict; any pass is cross-checked against prj ⊆ add(X)
    """
    if strategy not in (THEOREM, RELATIVE):
        raise ValueError(f"unknown strategy {strategy!r}, expected {THEOREM!r} or {RELATIVE!r}")
    outside = [x.label for x in X if Msub.index_of(x) is None]
    if outside:
        return CheckReport("is_n_cotorsion", Verdict.NOT_APPLICABLE, "X must lie in add(M)", {},
                           {"outside": outside}, seed)
    try:
        if strategy == THEOREM:
            report = _theorem_strategy(X, Msub, n, seed, cap)
        else:
            report = _relative_strategy(X, Msub, U, n, tails, seed, cap)
    except (DecompositionInconclusiveError, IsoInconclusiveError) as e:
        logger.warning("is_n_cotorsion inconclusive: %s", e)
        return CheckReport("is_n_cotorsion", Verdict.INCONCLUSIVE, "", {"strategy": strategy}, {"reason": str(e)},
                           seed)
    if report.passed and not contains_projectives(X, Msub.algebra):
        logger.error("n-cotorsion certified for a class without all projectives: %r", X)
        return CheckReport(report.check, Verdict.INCONCLUSIVE, report.scope, report.certificate,
                           {"reason": "certified class does not contain the projectives"}, seed)
    if strategy == RELATIVE:
        return U.finalize(report)
    return report


def _syzygy_closed(X: Subcat, n: int, depth: int) -> bool:
    return all(omega.is_zero() or X.in_add(omega) is not None
               for x in X for omega in (syzygy(x, n * i) for i in range(1, depth + 1)))


def basic_properties_audit(
        X: Subcat,
        Msub: Subcat,
        n: int,
        depth: int = 2,
        tails: Sequence[Tail] = (),
        seed: int = 0,
        cap: int = DEFAULT_ENUMERATION_CAP,
) -> CheckReport:
    """Audit the properties every n-cotorsion class has

    Closure under sums and summands holds for every Subcat and is recorded.
    Every projective must lie in add(X). When X is closed under
    n-syzygies, the degree n·i ladders of X-exact_n tails must be exact for
    i <= depth; the tails audited are the given ones and those of the
    n-special precovers of the generators of Msub, each certified first.

    Args:
      X: Subcat: A class claimed to be n-cotorsion
      Msub: Subcat: The ambient cluster tilting subcategory
      n: int: The length parameter
      depth: int: (Default value = 2)
        The highest multiple of n audited
      tails: Sequence[Tail]: (Default value = ())
        Extra tails
      seed: int: (Default value = 0)
        Seed for the membership tests
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The enumeration cap

    Returns:
      CheckReport: Fail with the failing property and its witness, otherwise Pass
    """
    check = "basic_properties_audit"
    certificate: dict[str, Any] = {"sums_and_summands": "closed by construction"}
    for P in projective_modules(Msub.algebra):
        if not P.is_zero() and X.in_add(P) is None:
            certificate["contains_projectives"] = False
            return CheckReport(check, Verdict.FAIL, "", certificate,
                               {"property": "contains projectives", "witness": P.label}, seed)
    certificate["contains_projectives"] = True
    if not _syzygy_closed(X, n, depth):
        certificate["higher_ladders"] = Verdict.NOT_APPLICABLE.value
        return CheckReport(check, Verdict.PASS, "", certificate, None, seed)
    family = []
    for t in tails:
        if is_in_X_exact_n(X, t, n, seed).passed:
            family.append(t)
    for g in Msub:
        s, report = _precover_attempt(X, Msub, g, n, seed, cap)
        if s is not None and report.passed:
            family.append(s.tail())
    for t in family:
        for i in range(1, depth + 1):
            for x in X:
                reason = ext_ladder(x, t.maps, n * i, t.modules).failure()
                if reason is not None:
                    certificate["higher_ladders"] = Verdict.FAIL.value
                    return CheckReport(check, Verdict.FAIL, "", certificate,
                                       {"property": "closed under n-syzygies, higher ladders exact",
                                        "generator": x.label, "tail": t.label, "degree": n * i, "reason": reason},
                                       seed)
    certificate["higher_ladders"] = {"tails": [t.label for t in family], "degrees": [n * i for i in range(1, depth + 1)]}
    return CheckReport(check, Verdict.PASS, f"{len(family)} certified tails", certificate, None, seed)


def complete_cotorsion_corollary(X: Subcat, Msub: Subcat, Y: Subcat | None = None, seed: int = 0) -> CheckReport:
    """Whether add(Msub) ⊆ Y for the cotorsion pair (X, Y)

    A generator m is in Y = X^{⊥1} when Ext^1(x, m) vanishes for every
    generator x; when Y is given by generators, membership in add(Y) is
    required as well.
    """
    check = "complete_cotorsion_corollary"
    for m in Msub:
        for x in X:
            if ext_dim(x, m, 1):
                return CheckReport(check, Verdict.FAIL, "M ⊆ Y", {}, {"module": m.label, "generator": x.label,
                                                                      "reason": "Ext^1(x, m) is not zero"}, seed)
        if Y is not None and Y.in_add(m) is None:
            return CheckReport(check, Verdict.FAIL, "M ⊆ Y", {}, {"module": m.label, "reason": "not in add(Y)"}, seed)
    return CheckReport(check, Verdict.PASS, "M ⊆ Y", {"generators": Msub.labels}, None, seed)


def thm_ext_vanishing_path(
        X: Subcat,
        Msub: Subcat,
        U: Universe,
        n: int,
        Y: Subcat | None = None,
        seed: int = 0,
        cap: int = DEFAULT_ENUMERATION_CAP,
) -> CheckReport:
    """Certify n-cotorsion from Ext^n(X, X) = 0 and special precovers

    In an nZ cluster tilting pair a summand-closed special precovering class
    with Ext^n(X, X) = 0 is n-cotorsion. Special precovering is checked on U:
    every u has 0 -> y -> x -> u -> 0 with x in add(X) and Ext^1(X, y) = 0,
    built from a minimal right approximation and its kernel.

    Args:
      X: Subcat: The candidate class
      Msub: Subcat: An nZ cluster tilting subcategory
      U: Universe: The modules to precover
      n: int: The length parameter
      Y: Subcat | None: (Default value = None)
        A class with (X, Y) a complete cotorsion pair, for the M ⊆ Y check
      seed: int: (Default value = 0)
        Seed for the membership tests
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The enumeration cap

    Returns:
      CheckReport: NotApplicable if Msub is not nZ, else Pass or Fail with the witness
    """
    check = "thm_ext_vanishing_path"
    closed = is_nZ(Msub, n, 1, seed)
    if not closed.passed:
        return CheckReport(check, Verdict.NOT_APPLICABLE, "M must be closed under n-syzygies",
                           {"is_nZ": closed.to_dict()}, None, seed)
    for x in X:
        for x_prime in X:
            if ext_dim(x, x_prime, n):
                return U.finalize(CheckReport(check, Verdict.FAIL, "", {},
                                              {"pair": [x.label, x_prime.label], "degree": n,
                                               "reason": f"Ext^{n} between generators of X is not zero"}, seed))
    precovers = {}
    for u in U:
        approximation = right_minimalize(right_approx(X, u, force_epi=True), cap, strict=False)
        if not approximation.surjective:
            return U.finalize(CheckReport(check, Verdict.FAIL, "", {"precovers": precovers},
                                          {"module": u.label, "reason": "no surjection from add(X)"}, seed))
        y = kernel(approximation.map).source
        bad = next((x for x in X if ext_dim(x, y, 1)), None)
        if bad is not None:
            return U.finalize(CheckReport(check, Verdict.FAIL, "", {"precovers": precovers},
                                          {"module": u.label, "generator": bad.label,
                                           "reason": "Ext^1(x, y) is not zero for the kernel y"}, seed))
        precovers[u.label] = {"x": [X[k].label for k in approximation.summands], "y": list(y.dim_vector)}
    certificate: dict[str, Any] = {
        "certified_via": "Ext^n(X, X) = 0 and special precovering",
        "precovers": precovers,
    }
    verdict = Verdict.PASS
    counterexample = None
    if Y is not None:
        corollary = complete_cotorsion_corollary(X, Msub, Y, seed)
        certificate["corollary"] = corollary.to_dict()
        verdict = combine_verdicts([verdict, corollary.verdict])
        counterexample = corollary.counterexample
    return U.finalize(CheckReport(check, verdict, "", certificate, counterexample, seed))


def _object_report(check: str, m: Module, family: Sequence[Module], U: Universe | None, covariant: bool,
                   seed: int) -> CheckReport:
    member = m.is_zero() or Subcat(family).in_add(m) is not None
    certificate: dict[str, Any] = {"member": member}
    if U is not None:
        vanishes = all(ext_dim(m, u, 1) == 0 if covariant else ext_dim(u, m, 1) == 0 for u in U)
        certificate["ext1_vanishes"] = vanishes
        if U.is_complete and vanishes != member:
            logger.error("%s: membership and Ext^1 vanishing disagree for %s", check, m.label)
            return CheckReport(check, Verdict.INCONCLUSIVE, U.scope, certificate,
                               {"module": m.label, "reason": "membership and Ext^1 vanishing disagree"}, seed)
    if member:
        return CheckReport(check, Verdict.PASS, "", certificate, None, seed)
    return CheckReport(check, Verdict.FAIL, "", certificate, {"module": m.label}, seed)


def is_projective_object(m: Module, U: Universe | None = None, seed: int = 0) -> CheckReport:
    """Whether m is projective, cross-checked by Ext^1(m, u) = 0 on a complete universe"""
    return _object_report("is_projective_object", m, projective_modules(m.algebra), U, True, seed)


def is_injective_object(m: Module, U: Universe | None = None, seed: int = 0) -> CheckReport:
    """Whether m is injective, cross-checked by Ext^1(u, m) = 0 on a complete universe"""
    return _object_report("is_injective_object", m, injective_modules(m.algebra), U, False, seed)
