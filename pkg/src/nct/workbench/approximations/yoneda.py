from __future__ import annotations

import logging

from ..homology import ext_group, generator_position, map_from_projective
from ..linalg import Mat, solve, vstack
from ..modules import (
    Module,
    ModuleMap,
    Subcat,
    combine,
    decompose,
    factor_before,
    factor_through,
    hom_basis,
    identity_map,
    kernel,
)
from ..shared import DEFAULT_ENUMERATION_CAP, enumerate_vectors, enumeration_size
from .NSequence import NSequence
from .n_exact import complete_pushout

logger = logging.getLogger(__name__)


def lift_generators(tops: tuple[int, ...], through: ModuleMap, target: ModuleMap) -> ModuleMap:
    """A map ψ from the projective ⊕ P_v with through∘ψ = target, solved one generator at a time"""
    algebra = through.source.algebra
    images = []
    for s, v in enumerate(tops):
        wanted = target.vertex_mats[v].column(generator_position(algebra, tops, s))
        preimage = solve(through.vertex_mats[v], wanted)
        if preimage is None:
            raise ValueError("the map does not lift: the sequence is not exact")
        images.append(preimage)
    return map_from_projective(tops, through.source, images)


def class_of_sequence(s: NSequence) -> Mat:
    """The degree-n cocycle of the class of s in Ext^n(m_0, m_{n+1})

    The identity of m_0 is lifted to a chain map from the minimal projective
    resolution of m_0 into s; its component P_n -> m_{n+1} is the cocycle.

    Args:
      s: NSequence: An exact sequence

    Returns:
      Mat: A cochain column in the model of ext_group(m_0, m_{n+1}, n)
    """
    n = s.n
    group = ext_group(s.right, s.left, n)
    resolution = group.resolution
    if len(resolution.terms) <= n:
        return Mat.zeros(s.left.field, group.cochain_dim, 1)
    target = resolution.augmentation
    psi = None
    for i in range(n + 1):
        tops = resolution.tops_at(i)
        if i > 0:
            target = psi @ resolution.differentials[i - 1]
        psi = lift_generators(tops, s.u(i + 1), target)
    algebra = s.algebra
    columns = [psi.vertex_mats[v].column(generator_position(algebra, group.tops, k))
               for k, v in enumerate(group.tops)]
    return vstack(s.left.field, columns, 1)


def class_coordinates(s: NSequence) -> Mat:
    """The class of s in the basis of ext_group(m_0, m_{n+1}, n)"""
    return ext_group(s.right, s.left, s.n).coordinates(class_of_sequence(s))


def ext_class_representative(
        Msub: Subcat,
        x: Module,
        x_prime: Module,
        n: int,
        cocycle: Mat,
        cap: int = DEFAULT_ENUMERATION_CAP,
) -> NSequence:
    """An n-exact sequence 0 -> x′ -> e_n -> ... -> e_1 -> x -> 0 in add(Msub) with the given class

    The truncated minimal resolution 0 -> Ω^n x -> P_{n-1} -> ... -> P_0 -> x -> 0
    is pushed out along the map Ω^n x -> x′ the cocycle induces, with every
    new middle term moved into add(Msub) by a left approximation. The class of
    the result is read back and compared with the input.

    Args:
      Msub: Subcat: The subcategory the middle terms must lie in
      x: Module: The right end
      x_prime: Module: The left end
      n: int: The degree
      cocycle: Mat: A cocycle column of ext_group(x, x_prime, n)
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The enumeration cap

    Returns:
      NSequence: The representative; the split sequence for the zero class

    Raises:
      RepresentativeEscapesMError: If the middle terms cannot be kept in add(Msub)
    """
    group = ext_group(x, x_prime, n)
    if group.is_zero_class(cocycle):
        return NSequence.split(n, x_prime, x)
    resolution = group.resolution
    omega = resolution.syzygy(n)
    modules = [omega] + [resolution.terms[i] for i in range(n - 1, -1, -1)] + [x]
    maps = ([resolution.syzygy_maps[n - 1]] + [resolution.differentials[i] for i in range(n - 2, -1, -1)]
            + [resolution.augmentation])
    top = NSequence(n, modules, maps, check=False)
    along = factor_before(group.cocycle_map(cocycle), resolution.covers[n])
    if along is None:
        raise ValueError("the cochain does not vanish on the next syzygy: not a cocycle")
    bottom = complete_pushout(Msub, top, along, cap).bottom
    difference = group.coordinates(class_of_sequence(bottom)) - group.coordinates(cocycle)
    if not difference.is_zero():
        logger.error("representative of a class of Ext^%d(%s, %s) has a different class", n, x.label,
                     x_prime.label)
        raise ValueError("the rebuilt sequence does not represent the requested class")
    return bottom


def is_in_radical(f: ModuleMap, cap: int = DEFAULT_ENUMERATION_CAP) -> bool | None:
    """Whether 1 - g∘f is invertible for every g: N -> M, where f: M -> N

    Args:
      f: ModuleMap: The map
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The largest Hom(N, M) enumerated

    Returns:
      bool | None: The answer, or None when Hom(N, M) is above the cap
    """
    M, N = f.source, f.target
    h = len(hom_basis(N, M))
    if enumeration_size(M.field.p, h) > cap:
        return None
    one = identity_map(M)
    for coefficients in enumerate_vectors(M.field.p, h, cap, "radical test"):
        if not (one - combine(N, M, coefficients) @ f).is_isomorphism():
            return False
    return True


def radical_witness(f: ModuleMap, seed: int = 0, cap: int = DEFAULT_ENUMERATION_CAP) -> tuple[ModuleMap, ModuleMap] | None:
    """Indecomposable summands ι: g -> M and π: N -> g′ with π∘f∘ι invertible

    A map is in the radical exactly when no such pair exists.

    Returns:
      tuple[ModuleMap, ModuleMap] | None: (ι, π), or None if f is in the radical
    """
    sources = [i for summand in decompose(f.source, seed, cap) for i in summand.inclusions]
    targets = [p for summand in decompose(f.target, seed, cap) for p in summand.projections]
    for inclusion in sources:
        for projection in targets:
            if (projection @ f @ inclusion).is_isomorphism():
                return inclusion, projection
    return None


def _split_off(s: NSequence, i: int, inclusion: ModuleMap, projection: ModuleMap) -> NSequence:
    """Remove the contractible summand g -> g at u_i singled out by π∘u_i∘ι invertible"""
    u = s.u(i)
    r = (projection @ u @ inclusion).inverse() @ projection
    upper = kernel(r @ u)
    lower = kernel(r)
    modules = list(s.modules)
    maps = list(s.maps)
    position = s.n + 1 - i
    modules[position] = upper.source
    modules[position + 1] = lower.source
    if i < s.n + 1:
        maps[position - 1] = factor_through(s.u(i + 1), upper)
    maps[position] = factor_through(u @ upper, lower)
    if i > 1:
        maps[position + 1] = s.u(i - 1) @ lower
    return NSequence(s.n, modules, maps)


def almost_minimalize(s: NSequence, seed: int = 0, cap: int = DEFAULT_ENUMERATION_CAP) -> NSequence:
    """Split off contractible summands until every interior map u_2..u_n is radical

    The end terms are untouched and the class in Ext^n(m_0, m_{n+1}) is kept.

    Args:
      s: NSequence: An n-exact sequence
      seed: int: (Default value = 0)
        Seed for the decompositions
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The enumeration cap

    Returns:
      NSequence: An almost minimal sequence
    """
    current = s
    changed = True
    while changed:
        changed = False
        for i in range(2, current.n + 1):
            witness = radical_witness(current.u(i), seed, cap)
            if witness is not None:
                logger.debug("splitting a %s summand off u_%d", witness[0].source.label, i)
                current = _split_off(current, i, *witness)
                changed = True
                break
    return current


def is_almost_minimal(s: NSequence, seed: int = 0, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    return all(radical_witness(s.u(i), seed, cap) is None for i in range(2, s.n + 1))
