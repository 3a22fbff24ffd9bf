from __future__ import annotations

import logging
import re
from dataclasses import dataclass

import numpy as np

from ..algebra import Algebra, Quiver, Relation, build_algebra, regular_module
from ..checks import Completeness, Universe
from ..linalg import Mat
from ..modules import Module, decompose
from ..shared import DEFAULT_ENUMERATION_CAP, InputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NakayamaSpec:
    """A linear Nakayama algebra kA_m/rad^l

    Attributes:
      m: int: The number of vertices of the linear quiver 1 -> 2 -> ... -> m
      l: int: The nilpotency index of the radical, at least 2
      p: int: The prime
    """
    m: int
    l: int
    p: int = 2

    def __post_init__(self: NakayamaSpec) -> None:
        if self.m < 1:
            raise ValueError(f"a Nakayama algebra needs at least one vertex, got m={self.m}")
        if self.l < 2:
            raise ValueError(f"the radical bound must be at least 2, got l={self.l}")

    @property
    def name(self: NakayamaSpec) -> str:
        return f"nakayama:m={self.m},l={self.l},p={self.p}"


def _arrow_id(v: int) -> str:
    return f"a{v + 1}"


def _aliases(labels: dict[str, int], prefix: str, i: int, k: int) -> None:
    labels[f"{prefix}{i}"] = k
    labels[f"{prefix}_{i}"] = k


def _cross_validate(algebra: Algebra, universe: Universe, projectives: set[int], seed: int, cap: int) -> None:
    """Certify the classification: indecomposable pieces, and Λ splits into the projective ones"""
    universe.validate(seed, cap)
    found = []
    for summand in decompose(regular_module(algebra), seed, cap):
        k = universe.index_of(summand.module, seed, cap)
        if k is None or k not in projectives:
            raise ValueError(f"{summand.module.label} is a summand of Λ outside the projectives of {universe!r}")
        found.extend([k] * summand.multiplicity)
    if sorted(found) != sorted(projectives):
        raise ValueError(f"Λ does not split into the projectives of {universe!r}")
    logger.debug("classification of %s cross-validated", universe.name)


def _interval(algebra: Algebra, i: int, j: int, name: str) -> Module:
    """M[i,j] over the linear quiver, vertices counted from 1"""
    field = algebra.field
    dims = [1 if i <= v + 1 <= j else 0 for v in range(algebra.vertex_count)]
    mats = []
    for arrow in algebra.quiver.arrows:
        if dims[arrow.source] and dims[arrow.target]:
            mats.append(Mat.identity(field, 1))
        else:
            mats.append(Mat.zeros(field, dims[arrow.target], dims[arrow.source]))
    return Module(algebra, dims, mats, name=name)


def nakayama_universe(
        spec: NakayamaSpec,
        validate: bool = True,
        seed: int = 0,
        cap: int = DEFAULT_ENUMERATION_CAP,
) -> tuple[Algebra, Universe]:
    """kA_m/rad^l with its complete list of indecomposables

    The indecomposables are the interval modules M[i,j] with at most l
    composition factors. Each is labelled S_i when simple, then P_i when
    projective, then I_j when injective, and M[i,j] otherwise; every name
    that applies is an alias.

    Args:
      spec: NakayamaSpec: The algebra
      validate: bool: (Default value = True)
        Certify every interval indecomposable and decompose the regular module
      seed: int: (Default value = 0)
        Seed for the cross-validation
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The enumeration cap of the cross-validation

    Returns:
      tuple[Algebra, Universe]: The algebra and its Complete universe
    """
    m, l = spec.m, spec.l
    quiver = Quiver.from_edges(m, [(_arrow_id(v), v, v + 1) for v in range(m - 1)])
    relations = [
        Relation.monomial(quiver.path([_arrow_id(v + t) for t in range(l)]))
        for v in range(m - l)
    ]
    algebra = build_algebra(quiver, relations, l, spec.p, name=spec.name)

    modules = []
    aliases: dict[str, int] = {}
    projectives = set()
    for i in range(1, m + 1):
        for j in range(i, min(i + l - 1, m) + 1):
            k = len(modules)
            simple = i == j
            projective = j == min(i + l - 1, m)
            injective = i == max(1, j - l + 1)
            if simple:
                _aliases(aliases, "S", i, k)
            if projective:
                _aliases(aliases, "P", i, k)
                projectives.add(k)
            if injective:
                _aliases(aliases, "I", j, k)
            aliases[f"M[{i},{j}]"] = k
            if simple:
                label = f"S{i}"
            elif projective:
                label = f"P{i}"
            elif injective:
                label = f"I{j}"
            else:
                label = f"M[{i},{j}]"
            modules.append(_interval(algebra, i, j, label))
    expected = sum(min(l, m - i + 1) for i in range(1, m + 1))
    if len(modules) != expected:
        raise ValueError(f"{len(modules)} intervals built, expected {expected}")

    universe = Universe(algebra, modules, Completeness.COMPLETE, aliases, name=spec.name)
    if validate:
        _cross_validate(algebra, universe, projectives, seed, cap)
    return algebra, universe


def semisimple_universe(v: int, p: int = 2) -> tuple[Algebra, Universe]:
    """k × ... × k with v factors: v vertices, no arrows, v simple modules"""
    if v < 1:
        raise ValueError(f"a semisimple algebra needs at least one vertex, got v={v}")
    name = f"semisimple:v={v},p={p}"
    algebra = build_algebra(Quiver(v, ()), [], 2, p, name=name)
    modules = []
    aliases: dict[str, int] = {}
    for i in range(1, v + 1):
        dims = [1 if u + 1 == i else 0 for u in range(v)]
        modules.append(Module(algebra, dims, [], name=f"S{i}"))
        for prefix in ("S", "P", "I"):
            _aliases(aliases, prefix, i, i - 1)
    return algebra, Universe(algebra, modules, Completeness.COMPLETE, aliases, name=name)


def _uniserial(algebra: Algebra, top: int, length: int, name: str) -> Module:
    """M[top;length] over the cyclic quiver: basis b_0..b_{length-1}, b_t at vertex top + t"""
    field = algebra.field
    count = algebra.vertex_count
    vertex = [(top - 1 + t) % count for t in range(length)]
    local = [vertex[:t].count(vertex[t]) for t in range(length)]
    dims = [vertex.count(u) for u in range(count)]
    mats = []
    for arrow in algebra.quiver.arrows:
        array = np.zeros((dims[arrow.target], dims[arrow.source]), dtype=np.int64)
        for t in range(length - 1):
            if vertex[t] == arrow.source:
                array[local[t + 1], local[t]] = 1
        mats.append(Mat(field, array))
    return Module(algebra, dims, mats, name=name)


def cyclic_nakayama_universe(
        m: int,
        l: int,
        p: int = 2,
        validate: bool = True,
        seed: int = 0,
        cap: int = DEFAULT_ENUMERATION_CAP,
) -> tuple[Algebra, Universe]:
    """The cyclic quiver on m vertices modulo all paths of length l

    The indecomposables are the uniserials M[i;k] with top S_i and
    1 <= k <= l composition factors. The ones of length l are projective
    and injective. m=1, l=2 is k[x]/(x²).

    Args:
      m: int: The number of vertices, arrows i -> i+1 mod m
      l: int: The length of the relations, at least 2
      p: int: (Default value = 2)
        The prime
      validate: bool: (Default value = True)
        Certify the classification as for nakayama_universe
      seed: int: (Default value = 0)
        Seed for the cross-validation
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The enumeration cap of the cross-validation

    Returns:
      tuple[Algebra, Universe]: The algebra and its Complete universe
    """
    if m < 1:
        raise ValueError(f"a cyclic Nakayama algebra needs at least one vertex, got m={m}")
    if l < 2:
        raise ValueError(f"the relation length must be at least 2, got l={l}")
    name = f"cyclic:m={m},l={l},p={p}"
    quiver = Quiver.from_edges(m, [(_arrow_id(v), v, (v + 1) % m) for v in range(m)])
    relations = [
        Relation.monomial(quiver.path([_arrow_id((v + t) % m) for t in range(l)]))
        for v in range(m)
    ]
    algebra = build_algebra(quiver, relations, l, p, name=name)

    modules = []
    aliases: dict[str, int] = {}
    projectives = set()
    for i in range(1, m + 1):
        for k in range(1, l + 1):
            index = len(modules)
            aliases[f"M[{i};{k}]"] = index
            if k == 1:
                _aliases(aliases, "S", i, index)
            if k == l:
                _aliases(aliases, "P", i, index)
                _aliases(aliases, "I", (i - 1 + l - 1) % m + 1, index)
                projectives.add(index)
            label = f"S{i}" if k == 1 else f"P{i}" if k == l else f"M[{i};{k}]"
            modules.append(_uniserial(algebra, i, k, label))

    universe = Universe(algebra, modules, Completeness.COMPLETE, aliases, name=name)
    if validate:
        _cross_validate(algebra, universe, projectives, seed, cap)
    return algebra, universe


_CATALOG_NAME = re.compile(r"^(?P<kind>[a-z]+):(?P<params>[a-z]=\d+(,[a-z]=\d+)*)$")

_PARAMETERS = {
    "nakayama": ({"m", "l"}, {"p"}),
    "semisimple": ({"v"}, {"p"}),
    "cyclic": ({"m", "l"}, {"p"}),
}


def parse_catalog_name(name: str, seed: int = 0, cap: int = DEFAULT_ENUMERATION_CAP) -> tuple[Algebra, Universe]:
    """Build a catalog algebra from its name

    Names look like "nakayama:m=3,l=2,p=2", "semisimple:v=2,p=3" or
    "cyclic:m=1,l=2,p=2"; p defaults to 2.

    Args:
      name: str: The catalog name
      seed: int: (Default value = 0)
        Seed for the cross-validation
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The enumeration cap of the cross-validation

    Returns:
      tuple[Algebra, Universe]: The algebra and its Complete universe

    Raises:
      InputError: If the name is malformed or names no catalog family
    """
    match = _CATALOG_NAME.match(name.strip())
    if match is None:
        raise InputError("expected kind:key=value,... such as nakayama:m=3,l=2,p=2", name)
    kind = match.group("kind")
    if kind not in _PARAMETERS:
        raise InputError(f"unknown catalog family {kind!r}, expected one of {sorted(_PARAMETERS)}", name, kind)
    params = {}
    for item in match.group("params").split(","):
        key, value = item.split("=")
        if key in params:
            raise InputError(f"parameter {key!r} given twice", name, key)
        params[key] = int(value)
    required, optional = _PARAMETERS[kind]
    missing = required - params.keys()
    if missing:
        raise InputError(f"missing parameters {sorted(missing)}", name)
    unknown = params.keys() - required - optional
    if unknown:
        raise InputError(f"unknown parameters {sorted(unknown)}", name)
    p = params.get("p", 2)
    try:
        if kind == "nakayama":
            return nakayama_universe(NakayamaSpec(params["m"], params["l"], p), seed=seed, cap=cap)
        if kind == "semisimple":
            return semisimple_universe(params["v"], p)
        return cyclic_nakayama_universe(params["m"], params["l"], p, seed=seed, cap=cap)
    except ValueError as e:
        raise InputError(str(e), name)
