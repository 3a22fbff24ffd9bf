from __future__ import annotations

import logging
import os
from collections.abc import Sequence
from dataclasses import dataclass, field

from ..algebra import Algebra, QuotientMap, injective_modules, load_algebra, projective_modules, quotient_algebra
from ..algebra import relations_from_list
from ..approximations import Tail, load_nsequence
from ..catalog import parse_catalog_name
from ..checks import Completeness, Universe
from ..modules import Module, Subcat, decompose, load_module
from ..shared import InputError, WorkbenchError, read_json
from .RunConfig import RunConfig

logger = logging.getLogger(__name__)


@dataclass
class Context:
    """The algebra a command runs over, its universe and what the inputs resolved to

    Attributes:
      algebra: Algebra: The algebra
      universe: Universe: The universe, extended by loaded modules when declared
      config: RunConfig: The run configuration
      canonicalization: dict[str, list[str]]: Each input token and the summands it became
    """
    algebra: Algebra
    universe: Universe
    config: RunConfig
    canonicalization: dict[str, list[str]] = field(default_factory=dict)

    def _add(self: Context, module: Module) -> Module:
        """The universe member isomorphic to an indecomposable module, added when the universe is declared"""
        k = self.universe.index_of(module, self.config.seed, self.config.enumeration_cap)
        if k is not None:
            return self.universe[k]
        if self.universe.is_complete:
            raise InputError(f"{module.label} is not isomorphic to any member of the complete universe",
                             module.label)
        U = self.universe
        self.universe = Universe(U.algebra, list(U) + [module], Completeness.DECLARED, U.aliases, U.name)
        logger.info("declared universe extended by %s", module.label)
        return module

    def module(self: Context, token: str) -> Module:
        """A module named in the universe, or loaded from a JSON file

        Raises:
          InputError: If the token is neither a name in the universe nor a file
        """
        try:
            return self.universe.lookup(token)
        except KeyError as e:
            if not os.path.exists(token):
                raise InputError(e.args[0], token)
        module = load_module(token, self.algebra)
        if module.name is None:
            module = module.renamed(os.path.splitext(os.path.basename(token))[0])
        return module

    def subcat(self: Context, tokens: str, name: str) -> Subcat:
        """add of comma separated names or module files, decomposed and deduplicated up to isomorphism

        Raises:
          InputError: If the list is empty
        """
        generators: list[Module] = []
        seed, cap = self.config.seed, self.config.enumeration_cap
        for token in (t.strip() for t in tokens.split(",")):
            if not token:
                continue
            summands = [self._add(s.module) for s in decompose(self.module(token), seed, cap)]
            self.canonicalization[token] = [s.label for s in summands]
            for s in summands:
                if all(s is not g for g in generators):
                    generators.append(s)
        if not generators:
            raise InputError(f"subcategory {name} has no nonzero generator", tokens)
        return Subcat(generators, name=name, seed=seed, cap=cap)

    def tails(self: Context, paths: Sequence[str]) -> list[Tail]:
        return [load_nsequence(path, self.algebra).tail() for path in paths]


def declared_universe(algebra: Algebra, name: str | None = None) -> Universe:
    """The projectives and the injectives not isomorphic to them, with P_i and I_i aliases"""
    modules = list(projective_modules(algebra))
    aliases = {}
    for i, P in enumerate(modules):
        aliases[f"P{i + 1}"] = aliases[f"P_{i + 1}"] = i
    known = Universe(algebra, modules, Completeness.DECLARED)
    for i, injective in enumerate(injective_modules(algebra)):
        k = known.index_of(injective)
        if k is None:
            k = len(modules)
            modules.append(injective)
            known = Universe(algebra, modules, Completeness.DECLARED)
        aliases[f"I{i + 1}"] = aliases[f"I_{i + 1}"] = k
    return Universe(algebra, modules, Completeness.DECLARED, aliases, name=name)


def load_context(algebra_arg: str, config: RunConfig) -> Context:
    """Resolve --algebra: a catalog name, or an algebra JSON file with a declared universe

    Raises:
      InputError: If the name parses as neither
    """
    if not os.path.exists(algebra_arg) and ":" in algebra_arg:
        algebra, universe = parse_catalog_name(algebra_arg, config.seed, config.enumeration_cap)
    else:
        algebra = load_algebra(algebra_arg)
        universe = declared_universe(algebra, algebra.name or os.path.basename(algebra_arg))
    return Context(algebra, universe, config)


def load_quotient(context: Context, path: str) -> tuple[QuotientMap, Context]:
    """The quotient by a JSON list of extra relations, with a context over the quotient"""
    extra = relations_from_list(read_json(path), context.algebra.quiver, path, "$")
    try:
        q = quotient_algebra(context.algebra, extra)
    except (ValueError, WorkbenchError) as e:
        raise InputError(str(e), path)
    return q, Context(q.target, declared_universe(q.target, "quotient"), context.config)
