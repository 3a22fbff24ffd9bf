from __future__ import annotations

import logging
from dataclasses import dataclass

from ..linalg import rank
from ..modules import (
    Module,
    ModuleMap,
    Subcat,
    block_map,
    column_map,
    direct_sum,
    factor_before,
    factor_through,
    hom_dim,
    hom_functor_matrix,
    identity_map,
    map_factorization,
    pushout,
    row_map,
    zero_map,
)
from ..shared import (
    DEFAULT_ENUMERATION_CAP,
    ApproxNotSurjectiveError,
    CheckReport,
    NCokernelEscapesMError,
    NKernelEscapesMError,
    RepresentativeEscapesMError,
    Verdict,
)
from .NSequence import NSequence
from .approx import minimal_left_approx, minimal_right_approx

logger = logging.getLogger(__name__)


def n_kernel_in(Msub: Subcat, f: ModuleMap, n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> NSequence:
    """An n-kernel of the surjection f: x -> m inside add(Msub)

    Takes K_1 = ker f, then for i = 1..n-1 a minimal right approximation
    r_i -> K_i and K_{i+1} its kernel. The result is
    0 -> K_n -> r_{n-1} -> ... -> r_1 -> x -> m -> 0.

    Args:
      Msub: Subcat: The subcategory the terms must lie in
      f: ModuleMap: A surjection x -> m
      n: int: The length parameter
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The enumeration cap

    Returns:
      NSequence: The sequence with m_1 = x, m_0 = m

    Raises:
      ApproxNotSurjectiveError: If some approximation is not surjective
      NKernelEscapesMError: If K_n is not in add(Msub)
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if not f.is_surjective():
        raise ValueError(f"n-kernels are taken of surjections, {f!r} is not one")
    inclusion = map_factorization(f).kernel
    maps = [f]
    modules = [f.target, f.source]
    for i in range(1, n):
        K = inclusion.source
        approximation = minimal_right_approx(Msub, K, cap)
        if not approximation.surjective:
            raise ApproxNotSurjectiveError(
                f"the add({', '.join(Msub.labels)})-approximation of the kernel K_{i} is not surjective",
                K.label)
        maps.append(inclusion @ approximation.map)
        modules.append(approximation.module)
        inclusion = map_factorization(approximation.map).kernel
    maps.append(inclusion)
    modules.append(inclusion.source)
    last = inclusion.source
    if not last.is_zero() and Msub.in_add(last) is None:
        raise NKernelEscapesMError(f"the last kernel {list(last.dim_vector)} is not in add({', '.join(Msub.labels)})")
    logger.debug("n-kernel of %r: %s", f, [list(m.dim_vector) for m in reversed(modules)])
    return NSequence(n, list(reversed(modules)), list(reversed(maps)))


def n_cokernel_in(Msub: Subcat, f: ModuleMap, n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> NSequence:
    """An n-cokernel of the injection f: m -> x inside add(Msub), dual to n_kernel_in

    Raises:
      ApproxNotSurjectiveError: If some left approximation is not injective
      NCokernelEscapesMError: If the last cokernel is not in add(Msub)
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if not f.is_injective():
        raise ValueError(f"n-cokernels are taken of injections, {f!r} is not one")
    projection = map_factorization(f).cokernel
    maps = [f]
    modules = [f.source, f.target]
    for i in range(1, n):
        C = projection.target
        approximation = minimal_left_approx(Msub, C, cap)
        if not approximation.injective:
            raise ApproxNotSurjectiveError(
                f"the add({', '.join(Msub.labels)})-approximation of the cokernel C_{i} is not injective",
                C.label)
        maps.append(approximation.map @ projection)
        modules.append(approximation.module)
        projection = map_factorization(approximation.map).cokernel
    maps.append(projection)
    modules.append(projection.target)
    last = projection.target
    if not last.is_zero() and Msub.in_add(last) is None:
        raise NCokernelEscapesMError(
            f"the last cokernel {list(last.dim_vector)} is not in add({', '.join(Msub.labels)})")
    return NSequence(n, modules, maps)


def _covariant_failure(g: Module, s: NSequence) -> str | None:
    """Where 0 -> Hom(g, m_{n+1}) -> ... -> Hom(g, m_0) fails to be exact, m_0 excluded"""
    ranks = {i: rank(hom_functor_matrix(g, s.u(i))) for i in range(1, s.n + 2)}
    if ranks[s.n + 1] != hom_dim(g, s.module(s.n + 1)):
        return f"Hom({g.label}, u_{s.n + 1}) is not injective"
    for i in range(1, s.n + 1):
        if ranks[i] + ranks[i + 1] != hom_dim(g, s.module(i)):
            return f"Hom({g.label}, -) is not exact at m_{i}"
    return None


def _contravariant_failure(g: Module, s: NSequence) -> str | None:
    """Where 0 -> Hom(m_0, g) -> ... -> Hom(m_{n+1}, g) fails to be exact, m_{n+1} excluded"""
    ranks = {i: rank(hom_functor_matrix(g, s.u(i), covariant=False)) for i in range(1, s.n + 2)}
    if ranks[1] != hom_dim(s.module(0), g):
        return f"Hom(u_1, {g.label}) is not injective"
    for i in range(1, s.n + 1):
        if ranks[i] + ranks[i + 1] != hom_dim(s.module(i), g):
            return f"Hom(-, {g.label}) is not exact at m_{i}"
    return None


def _membership_failure(Msub: Subcat, s: NSequence) -> dict | None:
    for i in range(s.n + 1, -1, -1):
        m = s.module(i)
        if not m.is_zero() and Msub.in_add(m) is None:
            return {"position": i, "module": m.label, "reason": "not in the subcategory"}
    return None


def _hom_exactness_report(
        check: str,
        Msub: Subcat,
        s: NSequence,
        covariant: bool,
        contravariant: bool,
        seed: int,
) -> CheckReport:
    scope = f"Hom-exactness against the generators of add({', '.join(Msub.labels)})"
    escaped = _membership_failure(Msub, s)
    if escaped is not None:
        return CheckReport(check, Verdict.FAIL, scope, {}, escaped, seed)
    for g in Msub:
        for enabled, failure in ((covariant, _covariant_failure), (contravariant, _contravariant_failure)):
            if not enabled:
                continue
            reason = failure(g, s)
            if reason is not None:
                return CheckReport(check, Verdict.FAIL, scope, {}, {"generator": g.label, "reason": reason}, seed)
    certificate = {"generators": Msub.labels, "terms": [m.label for m in s.modules]}
    return CheckReport(check, Verdict.PASS, scope, certificate, None, seed)


def is_n_exact(Msub: Subcat, s: NSequence, seed: int = 0) -> CheckReport:
    """Whether s is n-exact in add(Msub)

    The sequence is an n-kernel of u_1 and an n-cokernel of u_{n+1} exactly
    when Hom(g, -) and Hom(-, g) turn it into exact sequences for every
    generator g; additivity extends this to all of add(Msub).

    Args:
      Msub: Subcat: The subcategory
      s: NSequence: The candidate
      seed: int: (Default value = 0)
        Seed for the membership tests, recorded in the report

    Returns:
      CheckReport: Pass, or Fail naming the generator and the spot
    """
    return _hom_exactness_report("is_n_exact", Msub, s, True, True, seed)


def is_n_kernel(Msub: Subcat, s: NSequence, seed: int = 0) -> CheckReport:
    """Whether (u_{n+1}, ..., u_2) is an n-kernel of u_1"""
    return _hom_exactness_report("is_n_kernel", Msub, s, True, False, seed)


def is_n_cokernel(Msub: Subcat, s: NSequence, seed: int = 0) -> CheckReport:
    """Whether (u_n, ..., u_1) is an n-cokernel of u_{n+1}"""
    return _hom_exactness_report("is_n_cokernel", Msub, s, False, True, seed)


def is_contractible(s: NSequence, seed: int = 0) -> CheckReport:
    """Whether the n-exact sequence s is contractible

    An n-exact sequence splits exactly when u_{n+1} is a split mono, exactly
    when u_1 is a split epi. Both are decided by a linear solve and must agree.

    Args:
      s: NSequence: An n-exact sequence
      seed: int: (Default value = 0)
        Recorded in the report

    Returns:
      CheckReport: Pass if contractible, Fail if not, Inconclusive if the criteria disagree
    """
    first, last = s.u(s.n + 1), s.u(1)
    retraction = factor_before(identity_map(first.source), first)
    section = factor_through(identity_map(last.target), last)
    certificate = {"retraction": retraction is not None, "section": section is not None}
    scope = "split mono at the left end and split epi at the right end"
    if (retraction is None) != (section is None):
        logger.error("contractibility criteria disagree on %r", s)
        return CheckReport("is_contractible", Verdict.INCONCLUSIVE, scope, certificate,
                           {"reason": "retraction and section criteria disagree"}, seed)
    if retraction is None:
        return CheckReport("is_contractible", Verdict.FAIL, scope, certificate,
                           {"reason": f"u_{s.n + 1} has no retraction and u_1 has no section"}, seed)
    return CheckReport("is_contractible", Verdict.PASS, scope, certificate, None, seed)


@dataclass(frozen=True)
class PushoutDiagram:
    """A morphism of n-exact sequences from top to bottom, fixed on the right end

    Attributes:
      top: NSequence: t_{n+1} -> ... -> t_0
      bottom: NSequence: b_{n+1} -> ... -> b_1 -> t_0
      verticals: tuple[ModuleMap, ...]: φ_{n+1} = f, φ_n, ..., φ_1, φ_0 = identity
      cone: NSequence | None: The mapping cone t_{n+1} -> t_n ⊕ b_{n+1} -> ... -> t_1 ⊕ b_2 -> b_1
      cone_report: CheckReport | None: Whether the cone is an n-cokernel of its first map
      cokernel: NSequence | None: The n-cokernel of the first cone map from n_cokernel_in
    """
    top: NSequence
    bottom: NSequence
    verticals: tuple[ModuleMap, ...]
    cone: NSequence | None = None
    cone_report: CheckReport | None = None
    cokernel: NSequence | None = None

    def vertical(self: PushoutDiagram, i: int) -> ModuleMap:
        """φ_i: t_i -> b_i"""
        return self.verticals[self.top.n + 1 - i]

    def commutes(self: PushoutDiagram) -> bool:
        return all((self.bottom.u(i) @ self.vertical(i)).equals(self.vertical(i - 1) @ self.top.u(i))
                   for i in range(1, self.top.n + 2))


def complete_pushout(Msub: Subcat, top: NSequence, f: ModuleMap, cap: int = DEFAULT_ENUMERATION_CAP) -> PushoutDiagram:
    """Push the exact sequence top out along f: t_{n+1} -> b_{n+1}, keeping t_0

    Y_n is the ordinary pushout of u_{n+1} and f. Each Y_i is embedded in
    add(Msub) by a minimal left approximation λ_i: Y_i -> e_i, and Y_{i-1} is
    the pushout of λ_i and the induced map Y_i -> t_{i-1}. The last Y_1 must
    already lie in add(Msub).

    Args:
      Msub: Subcat: The subcategory the new middle terms must lie in
      top: NSequence: An exact sequence
      f: ModuleMap: A map out of its left end
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The enumeration cap

    Returns:
      PushoutDiagram: The diagram without the cone

    Raises:
      RepresentativeEscapesMError: If some λ_i is not injective or Y_1 is not in add(Msub)
    """
    n = top.n
    if f.source is not top.left:
        raise ValueError("the pushout map must start at the left end of the sequence")
    square = pushout(top.u(n + 1), f)
    Y = square.module
    w = square.descend(top.u(n), zero_map(f.target, top.module(n - 1)))
    to_Y = square.first
    bottom_maps = {n + 1: square.second}
    verticals = {n + 1: f}
    modules = {n + 1: f.target}
    for i in range(n, 1, -1):
        approximation = minimal_left_approx(Msub, Y, cap)
        if not approximation.injective:
            raise RepresentativeEscapesMError(
                f"Y_{i} {list(Y.dim_vector)} does not embed into add({', '.join(Msub.labels)})")
        lam = approximation.map
        modules[i] = lam.target
        bottom_maps[i + 1] = lam @ bottom_maps[i + 1]
        verticals[i] = lam @ to_Y
        square = pushout(lam, w)
        following = zero_map(lam.target, top.module(i - 2))
        w = square.descend(following, top.u(i - 1))
        bottom_maps[i] = square.first
        to_Y = square.second
        Y = square.module
    if not Y.is_zero() and Msub.in_add(Y) is None:
        raise RepresentativeEscapesMError(f"Y_1 {list(Y.dim_vector)} is not in add({', '.join(Msub.labels)})")
    modules[1] = Y
    verticals[1] = to_Y
    bottom_maps[1] = w
    verticals[0] = identity_map(top.right)
    bottom = NSequence(n, [modules[i] for i in range(n + 1, 0, -1)] + [top.right],
                       [bottom_maps[i] for i in range(n + 1, 0, -1)])
    return PushoutDiagram(top, bottom, tuple(verticals[i] for i in range(n + 1, -1, -1)))


def _mapping_cone(diagram: PushoutDiagram) -> NSequence:
    top, bottom = diagram.top, diagram.bottom
    n = top.n
    sums = {n + 1: None}
    for i in range(n, 0, -1):
        sums[i] = direct_sum([top.module(i), bottom.module(i + 1)],
                             name=f"{top.module(i).label} ⊕ {bottom.module(i + 1).label}")
    f = diagram.vertical(n + 1)
    maps = [column_map(sums[n], [-top.u(n + 1), f], top.left)]
    for i in range(n, 1, -1):
        blocks = [[-top.u(i), None], [diagram.vertical(i), bottom.u(i + 1)]]
        maps.append(block_map(sums[i], sums[i - 1], blocks))
    maps.append(row_map(sums[1], [diagram.vertical(1), bottom.u(2)], bottom.module(1)))
    modules = [top.left] + [sums[i].module for i in range(n, 0, -1)] + [bottom.module(1)]
    return NSequence(n, modules, maps)


def n_pushout(
        Msub: Subcat,
        s: NSequence,
        f: ModuleMap,
        cap: int = DEFAULT_ENUMERATION_CAP,
        seed: int = 0,
) -> PushoutDiagram:
    """The n-pushout of the n-exact sequence s along f: m_{n+1} -> m′

    The bottom row is completed to an n-exact sequence ending at m_0. The
    mapping cone of the resulting morphism is checked to be an n-cokernel of
    α = (-u_{n+1}, f): m_{n+1} -> m_n ⊕ m′, and n_cokernel_in computes an
    n-cokernel of α as well when α is injective.

    Args:
      Msub: Subcat: The subcategory
      s: NSequence: An n-exact sequence in add(Msub)
      f: ModuleMap: A map from m_{n+1} into add(Msub)
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The enumeration cap
      seed: int: (Default value = 0)
        Recorded in the cone report

    Returns:
      PushoutDiagram: The diagram with its cone and cone report
    """
    diagram = complete_pushout(Msub, s, f, cap)
    cone = _mapping_cone(diagram)
    report = is_n_cokernel(Msub, cone, seed)
    alpha = cone.u(s.n + 1)
    cokernel = n_cokernel_in(Msub, alpha, s.n, cap) if alpha.is_injective() else None
    return PushoutDiagram(diagram.top, diagram.bottom, diagram.verticals, cone, report, cokernel)
