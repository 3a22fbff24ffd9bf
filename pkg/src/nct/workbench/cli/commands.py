from __future__ import annotations

import argparse
import logging
import sys
import time
from dataclasses import replace
from typing import Callable

from ..approximations import map_from_dict, minimal_right_approx, n_kernel_in, nsequence_to_dict, is_n_kernel
from ..catalog import brute_force_nct_search
from ..checks import (
    RELATIVE,
    THEOREM,
    is_left_closed_under_n_extensions,
    is_n_cluster_tilting,
    is_n_cotorsion,
    is_nz_homological_pair,
    is_wide,
    n_special_precover,
    restriction_experiment,
    wakamatsu_check,
)
from ..homology import ext_dim, ext_dim_by_coresolution
from ..modules import hom_basis
from ..shared import DEFAULT_ENUMERATION_CAP, CheckReport, InputError, Verdict, WorkbenchError, read_json
from .RunConfig import JSON, TEXT, RunConfig
from .inputs import Context, load_context, load_quotient

logger = logging.getLogger(__name__)

INPUT_ERROR = 3


class _Parser(argparse.ArgumentParser):
    """An argument parser whose usage errors exit with the input error status"""

    def error(self: _Parser, message: str) -> None:
        raise InputError(message, "<command line>")


def _integer_at_least(lowest: int) -> Callable[[str], int]:
    """An argparse type accepting integers no smaller than lowest"""

    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
        if value < lowest:
            raise argparse.ArgumentTypeError(f"must be at least {lowest}, got {value}")
        return value

    return parse


def _check_nct(args: argparse.Namespace, context: Context) -> CheckReport:
    config = context.config
    M = context.subcat(args.subcat, "M")
    return is_n_cluster_tilting(context.universe, M, args.n, config.seed, config.enumeration_cap)


def _check_nz(args: argparse.Namespace, context: Context) -> CheckReport:
    config = context.config
    M = context.subcat(args.subcat, "M")
    return is_nz_homological_pair(context.universe, M, args.n, config.depth, config.seed, config.enumeration_cap)


def _ext_table(args: argparse.Namespace, context: Context) -> CheckReport:
    U = context.universe
    degrees = list(range(args.max_degree + 1))
    table = {a.label: {b.label: [ext_dim(a, b, k) for k in degrees] for b in U} for a in U}
    certificate = {"degrees": degrees, "modules": U.labels, "ext": table}
    counterexample = None
    if args.balance:
        for a in U:
            for b in U:
                for k in degrees:
                    other = ext_dim_by_coresolution(a, b, k)
                    if other != table[a.label][b.label][k]:
                        counterexample = {"pair": [a.label, b.label], "degree": k,
                                          "projective_side": table[a.label][b.label][k], "injective_side": other}
                        break
        certificate["balanced"] = counterexample is None
    verdict = Verdict.PASS if counterexample is None else Verdict.FAIL
    scope = f"dim Ext^k for k = 0..{args.max_degree}"
    return U.finalize(CheckReport("ext_table", verdict, scope, certificate, counterexample, context.config.seed))


def _precover(args: argparse.Namespace, context: Context) -> CheckReport:
    X = context.subcat(args.x, "X")
    m = context.module(args.module)
    r = minimal_right_approx(X, m, context.config.enumeration_cap)
    return CheckReport("precover", Verdict.PASS, f"minimal right add(X)-approximation of {m.label}",
                       r.to_dict(), None, context.config.seed)


def _n_kernel(args: argparse.Namespace, context: Context) -> CheckReport:
    config = context.config
    M = context.subcat(args.subcat, "M")
    source, target = context.module(args.source), context.module(args.target)
    if args.map:
        f = map_from_dict(read_json(args.map), source, target, args.map, "$")
    else:
        basis = hom_basis(source, target)
        if not basis:
            raise InputError(f"Hom({source.label}, {target.label}) is zero", "--from/--to")
        f = basis[0]
    if not f.is_surjective():
        raise InputError(f"{f!r} is not surjective, n-kernels are taken of surjections", args.map or "--from/--to")
    s = n_kernel_in(M, f, args.n, config.enumeration_cap)
    report = is_n_kernel(M, s, config.seed)
    return replace(report, check="n_kernel", certificate=dict(report.certificate, sequence=nsequence_to_dict(s)))


def _n_special_precover(args: argparse.Namespace, context: Context) -> CheckReport:
    config = context.config
    X = context.subcat(args.x, "X")
    M = context.subcat(args.subcat, "M")
    s, report = n_special_precover(X, M, context.module(args.module), args.n, config.seed, config.enumeration_cap)
    return replace(report, certificate=dict(report.certificate, sequence=nsequence_to_dict(s)))


def _check_ncotorsion(args: argparse.Namespace, context: Context) -> CheckReport:
    config = context.config
    X = context.subcat(args.x, "X")
    M = context.subcat(args.subcat, "M")
    tails = context.tails(args.tail or [])
    for path, tail in zip(args.tail or [], tails):
        if tail.n != args.n:
            raise InputError(f"the sequence has length parameter {tail.n}, not {args.n}", path)
    return is_n_cotorsion(X, M, context.universe, args.n, args.strategy, tails, config.seed, config.enumeration_cap)


def _check_left_closed(args: argparse.Namespace, context: Context) -> CheckReport:
    config = context.config
    X = context.subcat(args.x, "X")
    M = context.subcat(args.subcat, "M")
    return is_left_closed_under_n_extensions(X, M, args.n, config.seed, config.enumeration_cap)


def _wakamatsu(args: argparse.Namespace, context: Context) -> CheckReport:
    config = context.config
    X = context.subcat(args.x, "X")
    M = context.subcat(args.subcat, "M")
    return wakamatsu_check(X, M, context.module(args.module), args.n, config.seed, config.enumeration_cap)


def _check_wide(args: argparse.Namespace, context: Context) -> CheckReport:
    config = context.config
    W = context.subcat(args.w, "W")
    M = context.subcat(args.subcat, "M")
    return is_wide(W, M, args.n, config.seed, config.enumeration_cap)


def _restrict(args: argparse.Namespace, context: Context) -> CheckReport:
    q, inner = load_quotient(context, args.quotient)
    M = inner.subcat(args.subcat, "M′")
    X = inner.subcat(args.x, "X′")
    context.canonicalization.update(inner.canonicalization)
    return restriction_experiment(q, M, X, args.n, context.config.seed)


def _oracle_search(args: argparse.Namespace, context: Context) -> CheckReport:
    config = context.config
    U = context.universe
    if not U.is_complete:
        return CheckReport("oracle_search", Verdict.NOT_APPLICABLE, U.scope, {},
                           {"reason": "the search needs a complete universe"}, config.seed)
    hits = brute_force_nct_search(U, args.n, config.seed, config.enumeration_cap)
    certificate = {"n": args.n, "count": len(hits), "hits": [h.labels for h in hits]}
    return CheckReport("oracle_search", Verdict.PASS, U.scope, certificate, None, config.seed)


def _common_options() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--algebra", required=True,
                        help="a catalog name such as nakayama:m=3,l=2,p=2, or an algebra JSON file")
    common.add_argument("--format", choices=[TEXT, JSON], default=TEXT)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cap", type=_integer_at_least(1), default=DEFAULT_ENUMERATION_CAP,
                        help="largest space enumerated exhaustively")
    common.add_argument("--depth", type=_integer_at_least(1), default=2)
    common.add_argument("--timing", action="store_true", help="record elapsed_ms in the report")
    common.add_argument("-v", "--verbose", action="count", default=0)
    return common


def _add(
        subparsers,
        name: str,
        handler: Callable[[argparse.Namespace, Context], CheckReport],
        common: argparse.ArgumentParser,
        help: str,
        options: tuple[str, ...],
) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(name, parents=[common], help=help)
    parser.set_defaults(handler=handler)
    if "n" in options:
        parser.add_argument("--n", type=_integer_at_least(1), required=True, help="the cluster tilting degree")
    if "subcat" in options:
        parser.add_argument("--subcat", required=True, help="generators of M: names or module files, comma separated")
    if "x" in options:
        parser.add_argument("--x", required=True, help="generators of X: names or module files, comma separated")
    if "module" in options:
        parser.add_argument("--module", required=True, help="a module name or module file")
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nct-workbench", description="Exact checks for n-cluster tilting and n-cotorsion")
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_options()

    _add(subparsers, "check-nct", _check_nct, common, "is add(M) n-cluster tilting", ("n", "subcat"))
    _add(subparsers, "check-nz", _check_nz, common, "is add(M) nZ cluster tilting", ("n", "subcat"))
    table = _add(subparsers, "ext-table", _ext_table, common, "dim Ext^k between universe members", ())
    table.add_argument("--max-degree", type=_integer_at_least(0), default=2)
    table.add_argument("--balance", action="store_true", help="compare with the injective coresolution")
    _add(subparsers, "precover", _precover, common, "minimal right add(X)-approximation", ("x", "module"))
    kernel = _add(subparsers, "n-kernel", _n_kernel, common, "n-kernel of a map inside add(M)", ("n", "subcat"))
    kernel.add_argument("--from", dest="source", required=True)
    kernel.add_argument("--to", dest="target", required=True)
    kernel.add_argument("--map", help="a JSON list of vertex matrices; the first basis hom otherwise")
    _add(subparsers, "n-special-precover", _n_special_precover, common, "n-special add(X)-precover of a module",
         ("n", "subcat", "x", "module"))
    cotorsion = _add(subparsers, "check-ncotorsion", _check_ncotorsion, common, "is X n-cotorsion in M",
                     ("n", "subcat", "x"))
    cotorsion.add_argument("--strategy", choices=[THEOREM, RELATIVE], default=THEOREM)
    cotorsion.add_argument("--tail", action="append", help="an n-sequence file whose tail joins the family")
    _add(subparsers, "check-left-closed", _check_left_closed, common, "is X left closed under n-extensions",
         ("n", "subcat", "x"))
    _add(subparsers, "wakamatsu", _wakamatsu, common, "n-kernel of a surjective add(X)-cover",
         ("n", "subcat", "x", "module"))
    wide = _add(subparsers, "check-wide", _check_wide, common, "is W wide in M", ("n", "subcat"))
    wide.add_argument("--w", required=True, help="generators of W: names or module files, comma separated")
    restrict = _add(subparsers, "restrict", _restrict, common, "restriction of scalars along a quotient",
                    ("n", "subcat", "x"))
    restrict.add_argument("--quotient", required=True, help="a JSON list of extra relations")
    _add(subparsers, "oracle-search", _oracle_search, common, "every n-cluster tilting subcategory", ("n",))
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def render(report: CheckReport, config: RunConfig) -> str:
    return report.to_json() if config.output_format == JSON else report.to_text()


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Parse a command line, run it, and return the exit status with the rendered report

    Args:
      argv: list[str] | None: (Default value = None)
        The arguments, sys.argv[1:] when None

    Returns:
      tuple[int, str]: 0 for Pass and PassRelative, 1 for Fail, 2 for
        Inconclusive and NotApplicable, 3 for input errors

    Only InputError maps to 3 once the command line is parsed. Any other
    WorkbenchError stops the check as Inconclusive, and a ValueError raised
    inside a check is an internal consistency alarm, reported as
    Inconclusive and logged at ERROR.
    """
    try:
        args = build_parser().parse_args(argv)
        config = RunConfig.from_args(args)
    except (InputError, ValueError) as e:
        return INPUT_ERROR, f"error: {e}"
    _configure_logging(config.verbosity)
    start = time.perf_counter()
    check = args.command.replace("-", "_")
    context = None
    try:
        context = load_context(args.algebra, config)
        report = args.handler(args, context)
    except InputError as e:
        logger.debug("input error", exc_info=True)
        return INPUT_ERROR, f"error: {e}"
    except WorkbenchError as e:
        logger.warning("%s stopped: %s", args.command, e)
        report = CheckReport(check, Verdict.INCONCLUSIVE, "", {}, {"error": type(e).__name__, "reason": str(e)},
                             config.seed)
    except ValueError as e:
        logger.error("%s raised an internal error: %s", args.command, e, exc_info=True)
        report = CheckReport(check, Verdict.INCONCLUSIVE, "", {}, {"error": "ValueError", "alarm": str(e)},
                             config.seed)
    if context is not None and context.canonicalization:
        report = replace(report, certificate=dict(report.certificate, inputs=context.canonicalization))
    if config.timing:
        report = report.timed(int((time.perf_counter() - start) * 1000))
    return report.exit_code, render(report, config)


def main(argv: list[str] | None = None) -> int:
    status, output = run(argv)
    print(output, file=sys.stdout if status != INPUT_ERROR else sys.stderr)
    return status
