from __future__ import annotations

import logging
from functools import lru_cache

from ..algebra import Algebra, QuotientMap
from ..approximations import lift_generators
from ..homology import ext_dim, ext_group, generator_position
from ..linalg import Mat, hstack, rank, vstack
from ..modules import Module, ModuleMap, Subcat
from ..shared import CACHE_SIZE, CheckReport, Verdict, combine_verdicts
from .Universe import Universe
from .cotorsion import RELATIVE, THEOREM, is_n_cotorsion

logger = logging.getLogger(__name__)


@lru_cache(maxsize=CACHE_SIZE)
def _inflate(algebra: Algebra, module: Module) -> Module:
    if module.is_zero():
        return Module.zero(algebra)
    return Module(algebra, module.dim_vector, module.arrow_mats, name=module.name)


def restrict_scalars(q: QuotientMap, module: Module) -> Module:
    """φ_* of a Λ′-module: the same representation, read over Λ

    The result is checked against the relations of Λ, and restricting the
    same module twice gives the same object.

    Args:
      q: QuotientMap: The surjection Λ -> Λ′
      module: Module: A module over Λ′

    Returns:
      Module: The module over Λ

    Raises:
      RelationViolatedError: If the representation violates a relation of Λ
    """
    if module.algebra is not q.target:
        raise ValueError(f"{module.label} is not a module over the quotient {q.target!r}")
    return _inflate(q.source, module)


def restrict_map(q: QuotientMap, f: ModuleMap) -> ModuleMap:
    return ModuleMap(restrict_scalars(q, f.source), restrict_scalars(q, f.target), f.vertex_mats, check=False)


def restrict_subcat(q: QuotientMap, C: Subcat) -> Subcat:
    name = f"φ*{C.name}" if C.name else None
    return Subcat([restrict_scalars(q, g) for g in C], name=name, seed=C.seed, cap=C.cap)


def inflation_map(q: QuotientMap, m1: Module, m2: Module, n: int) -> Mat:
    """The map Ext^n over Λ′ (m1, m2) -> Ext^n over Λ (φ_* m1, φ_* m2) in the class bases

    The minimal Λ-resolution P of φ_* m1 is lifted into φ_* of the minimal
    Λ′-resolution Q of m1, which stays exact. A Λ′-cocycle Q_n -> m2 composed
    with the lift P_n -> φ_* Q_n is a Λ-cocycle.

    Args:
      q: QuotientMap: The surjection Λ -> Λ′
      m1: Module: The first argument, over Λ′
      m2: Module: The second argument, over Λ′
      n: int: The degree

    Returns:
      Mat: A matrix of shape (dim Ext^n_Λ, dim Ext^n_Λ′)
    """
    inner = ext_group(m1, m2, n)
    outer = ext_group(restrict_scalars(q, m1), restrict_scalars(q, m2), n)
    field = m2.field
    if inner.dim == 0 or outer.dim == 0:
        return Mat.zeros(field, outer.dim, inner.dim)
    P = outer.resolution
    Q = inner.resolution
    target = P.augmentation
    psi = None
    for i in range(n + 1):
        if i > 0:
            target = psi @ P.differentials[i - 1]
        through = restrict_map(q, Q.augmentation if i == 0 else Q.differentials[i - 1])
        psi = lift_generators(P.tops_at(i), through, target)
    columns = []
    for k in range(inner.dim):
        cocycle = restrict_map(q, inner.cocycle_map(inner.classes.take_columns([k]))) @ psi
        parts = [cocycle.vertex_mats[v].column(generator_position(q.source, outer.tops, s))
                 for s, v in enumerate(outer.tops)]
        columns.append(vstack(field, parts, 1))
    return outer.coordinates(hstack(field, columns, outer.cochain_dim))


def ext_compare(q: QuotientMap, m1: Module, m2: Module, n: int, seed: int = 0) -> CheckReport:
    """Compare Ext^n over Λ′ with Ext^n over Λ after restriction

    Equal dimensions and a full rank inflation map make the induced map a
    bijection. The report is marked partial: the comparison is made on
    cochains in fixed bases.

    Args:
      q: QuotientMap: The surjection Λ -> Λ′
      m1: Module: The first argument, over Λ′
      m2: Module: The second argument, over Λ′
      n: int: The degree
      seed: int: (Default value = 0)
        Recorded in the report

    Returns:
      CheckReport: Pass when the inflation map is bijective, Fail otherwise
    """
    inner = ext_dim(m1, m2, n)
    outer = ext_dim(restrict_scalars(q, m1), restrict_scalars(q, m2), n)
    r = rank(inflation_map(q, m1, m2, n))
    certificate = {"pair": [m1.label, m2.label], "degree": n, "quotient_dim": inner, "algebra_dim": outer,
                   "inflation_rank": r, "partial": True}
    scope = "dimensions and rank of the inflation map on cochains"
    if inner == outer == r:
        return CheckReport("ext_compare", Verdict.PASS, scope, certificate, None, seed)
    return CheckReport("ext_compare", Verdict.FAIL, scope, certificate,
                       {"pair": [m1.label, m2.label], "reason": "the induced map on Ext is not bijective"}, seed)


def restriction_experiment(q: QuotientMap, Msub: Subcat, X: Subcat, n: int, seed: int = 0) -> CheckReport:
    """Rerun the n-cotorsion check on φ_*(X′) inside φ_*(M′)

    X′ must be certified n-cotorsion in add(M′) over Λ′, and the inflation
    map on Ext^n must be bijective for every pair of generators of M′. Then
    φ_*(X′) should be n-cotorsion in φ_*(M′); the relative strategy tests it.

    Args:
      q: QuotientMap: The surjection Λ -> Λ′
      Msub: Subcat: M′ over Λ′
      X: Subcat: X′ over Λ′
      n: int: The length parameter
      seed: int: (Default value = 0)
        Seed for the membership tests

    Returns:
      CheckReport: NotApplicable when a hypothesis fails, else the relative verdict
    """
    check = "restriction_experiment"
    inner_universe = Universe.declared(q.target, list(Msub))
    cotorsion = is_n_cotorsion(X, Msub, inner_universe, n, THEOREM, seed=seed)
    comparisons = [ext_compare(q, a, b, n, seed) for a in Msub for b in Msub]
    bijective = combine_verdicts(c.verdict for c in comparisons)
    certificate = {
        "cotorsion_over_quotient": cotorsion.verdict.value,
        "ext_bijective": bijective.value,
        "partial": True,
        "comparisons": [c.certificate for c in comparisons],
    }
    if not cotorsion.passed or not bijective.passed:
        return CheckReport(check, Verdict.NOT_APPLICABLE, "hypotheses over the quotient", certificate, None, seed)
    restricted = restrict_subcat(q, Msub)
    outer_universe = Universe.declared(q.source, list(restricted))
    report = is_n_cotorsion(restrict_subcat(q, X), restricted, outer_universe, n, RELATIVE, seed=seed)
    certificate["restricted"] = report.to_dict()
    if report.verdict is Verdict.FAIL:
        logger.error("restriction of an n-cotorsion class fails the relative check: %r", report.counterexample)
    return CheckReport(check, report.verdict, report.scope, certificate, report.counterexample, seed)
