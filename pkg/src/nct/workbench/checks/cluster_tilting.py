from __future__ import annotations

import logging
from typing import Any

from ..approximations import NSequence, left_approx, right_approx
from ..homology import cosyzygy, ext_dim, ext_induced_map, syzygy
from ..linalg import rank
from ..modules import Module, Subcat
from ..shared import (
    DEFAULT_ENUMERATION_CAP,
    CheckReport,
    DecompositionInconclusiveError,
    IsoInconclusiveError,
    Verdict,
    combine_verdicts,
)
from .Universe import Universe

logger = logging.getLogger(__name__)


def _orthogonality_failures(U: Universe, Msub: Subcat, n: int) -> list[dict[str, Any]]:
    """Where M^{⊥n} ∩ U or ^{⊥n}M ∩ U differs from add(Msub) ∩ U, with the offending degree"""
    failures = []
    degrees = range(1, n)
    for g in Msub:
        for h in Msub:
            for i in degrees:
                if ext_dim(g, h, i):
                    failures.append({"condition": "Ext-orthogonal generators", "module": h.label,
                                     "generator": g.label, "degree": i})
    for u in U:
        inside = Msub.index_of(u) is not None
        for perp, ext in (("M^⊥n", lambda g, i: ext_dim(g, u, i)), ("^⊥nM", lambda g, i: ext_dim(u, g, i))):
            witness = next(((g, i) for g in Msub for i in degrees if ext(g, i)), None)
            if inside and witness is not None:
                g, i = witness
                failures.append({"condition": f"M ⊆ {perp}", "module": u.label, "generator": g.label, "degree": i})
            elif not inside and witness is None:
                failures.append({"condition": f"{perp} ⊆ M", "module": u.label, "degree": None})
    return failures


def is_n_cluster_tilting(
        U: Universe,
        Msub: Subcat,
        n: int,
        seed: int = 0,
        cap: int = DEFAULT_ENUMERATION_CAP,
) -> CheckReport:
    """Whether add(Msub) is n-cluster tilting, quantified over U

    Functorial finiteness holds for add of finitely many modules and is only
    recorded. Generating and cogenerating are checked with approximations of
    every member of U; the orthogonality conditions M^{⊥n} = M = ^{⊥n}M are
    checked on U with Ext^i for 0 < i < n.

    Args:
      U: Universe: The modules quantified over
      Msub: Subcat: The candidate
      n: int: The cluster tilting degree, at least 1
      seed: int: (Default value = 0)
        Seed for the membership tests
      cap: int: (Default value = DEFAULT_ENUMERATION_CAP)
        The enumeration cap

    Returns:
      CheckReport: Pass (PassRelative over a declared universe) or Fail with
        the first offending module and every failure found
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    check = "is_n_cluster_tilting"
    try:
        failures = _orthogonality_failures(U, Msub, n)
        for u in U:
            if not right_approx(Msub, u, force_epi=True).surjective:
                failures.append({"condition": "generating", "module": u.label, "degree": None})
            if not left_approx(Msub, u).injective:
                failures.append({"condition": "cogenerating", "module": u.label, "degree": None})
    except (DecompositionInconclusiveError, IsoInconclusiveError) as e:
        logger.warning("%s inconclusive: %s", check, e)
        return U.finalize(CheckReport(check, Verdict.INCONCLUSIVE, "", {}, {"reason": str(e)}, seed))
    certificate = {
        "n": n,
        "generators": Msub.labels,
        "universe": U.labels,
        "functorially_finite": "add of finitely many modules",
    }
    if failures:
        counterexample = dict(failures[0], failures=failures)
        return U.finalize(CheckReport(check, Verdict.FAIL, "", certificate, counterexample, seed))
    return U.finalize(CheckReport(check, Verdict.PASS, "", certificate, None, seed))


def is_nZ(Msub: Subcat, n: int, depth: int = 2, seed: int = 0) -> CheckReport:
    """Whether add(Msub) is closed under n-syzygies, up to Ω^{n·depth}

    Syzygies come from minimal projective resolutions, so projective
    summands never appear and the zero module passes. The n-th cosyzygy is
    checked once as a cross-check.

    Args:
      Msub: Subcat: The subcategory
      n: int: The degree
      depth: int: (Default value = 2)
        How many multiples of n are checked
      seed: int: (Default value = 0)
        Recorded in the report

    Returns:
      CheckReport: Pass, or Fail with the generator and syzygy degree
    """
    check = "is_nZ"
    scope = f"Ω^(n·i) for i <= {depth} and Ω^(-n) of the generators"
    certificate: dict[str, Any] = {"n": n, "depth": depth, "syzygies": {}}
    try:
        for g in Msub:
            dims = []
            for i in range(1, depth + 1):
                omega = syzygy(g, n * i)
                dims.append(list(omega.dim_vector))
                if not omega.is_zero() and Msub.in_add(omega) is None:
                    return CheckReport(check, Verdict.FAIL, scope, certificate,
                                       {"generator": g.label, "degree": n * i, "syzygy": list(omega.dim_vector)},
                                       seed)
            co = cosyzygy(g, n)
            if not co.is_zero() and Msub.in_add(co) is None:
                return CheckReport(check, Verdict.FAIL, scope, certificate,
                                   {"generator": g.label, "degree": -n, "cosyzygy": list(co.dim_vector)}, seed)
            certificate["syzygies"][g.label] = dims
    except (DecompositionInconclusiveError, IsoInconclusiveError) as e:
        logger.warning("%s inconclusive: %s", check, e)
        return CheckReport(check, Verdict.INCONCLUSIVE, scope, certificate, {"reason": str(e)}, seed)
    return CheckReport(check, Verdict.PASS, scope, certificate, None, seed)


def is_nz_homological_pair(
        U: Universe,
        Msub: Subcat,
        n: int,
        depth: int = 2,
        seed: int = 0,
        cap: int = DEFAULT_ENUMERATION_CAP,
) -> CheckReport:
    """Whether add(Msub) is n-cluster tilting and closed under n-syzygies"""
    tilting = is_n_cluster_tilting(U, Msub, n, seed, cap)
    closed = is_nZ(Msub, n, depth, seed)
    verdict = combine_verdicts([tilting.verdict, closed.verdict])
    certificate = {"is_n_cluster_tilting": tilting.to_dict(), "is_nZ": closed.to_dict()}
    counterexample = None
    for report in (tilting, closed):
        if report.verdict is verdict and report.counterexample is not None:
            counterexample = dict(report.counterexample, check=report.check)
            break
    if verdict is Verdict.PASS_RELATIVE:
        verdict = Verdict.PASS
    return U.finalize(CheckReport("is_nz_homological_pair", verdict, "", certificate, counterexample, seed))


def _block(m: Module, s: NSequence, degree: int) -> tuple[list[int], dict[int, int]]:
    """dim Ext^degree(m, m_i) for i = n+1..0 and the ranks of Ext^degree(m, u_i)"""
    dims = [ext_dim(m, s.module(i), degree) for i in range(s.n + 1, -1, -1)]
    ranks = {i: rank(ext_induced_map(m, s.u(i), degree)) for i in range(1, s.n + 2)}
    return dims, ranks


def nz_long_exact_check(Msub: Subcat, s: NSequence, m: Module, n: int, depth: int = 2, seed: int = 0) -> CheckReport:
    """The long exact Ext^{n·k}(m, -) sequence of an n-exact sequence in an nZ pair

    For k = 0..depth the block Ext^{nk}(m, m_{n+1}) -> ... -> Ext^{nk}(m, m_0)
    must be exact at its interior terms, and injective at the start for k = 0.
    Between consecutive blocks the connecting map has a rank determined from
    both sides: dim Ext^{nk}(m, m_0) minus the rank into it, and
    dim Ext^{n(k+1)}(m, m_{n+1}) minus the rank out of it. The two must agree.

    Args:
      Msub: Subcat: The nZ cluster tilting subcategory
      s: NSequence: An n-exact sequence in add(Msub)
      m: Module: The first argument of Ext
      n: int: The degree
      depth: int: (Default value = 2)
        The last block is in degree n·depth
      seed: int: (Default value = 0)
        Recorded in the report

    Returns:
      CheckReport: Pass, or Fail with the degree and position of the failure
    """
    if s.n != n:
        raise ValueError(f"the sequence has length parameter {s.n}, not {n}")
    check = "nz_long_exact_check"
    scope = f"Hom and Ext^(n·k)({m.label}, -) for k <= {depth}"
    blocks = []
    for k in range(depth + 1):
        dims, ranks = _block(m, s, n * k)
        blocks.append({"degree": n * k, "dims": dims, "ranks": [ranks[i] for i in range(n + 1, 0, -1)]})
        if k == 0 and ranks[n + 1] != dims[0]:
            return CheckReport(check, Verdict.FAIL, scope, {"blocks": blocks},
                               {"degree": 0, "position": n + 1, "reason": f"Hom({m.label}, u_{n + 1}) is not injective"},
                               seed)
        for i in range(1, n + 1):
            if ranks[i] + ranks[i + 1] != dims[n + 1 - i]:
                return CheckReport(check, Verdict.FAIL, scope, {"blocks": blocks},
                                   {"degree": n * k, "position": i, "reason": "not exact at an interior term"}, seed)
    for k in range(depth):
        into_end = blocks[k]["dims"][-1] - blocks[k]["ranks"][-1]
        out_of_start = blocks[k + 1]["dims"][0] - blocks[k + 1]["ranks"][0]
        if into_end != out_of_start:
            return CheckReport(check, Verdict.FAIL, scope, {"blocks": blocks},
                               {"degree": n * k, "position": 0,
                                "reason": f"connecting map rank {into_end} from the left, {out_of_start} from the right"},
                               seed)
    if Msub.in_add(m) is None:
        logger.info("%s is not in the subcategory, the long exact sequence is not guaranteed", m.label)
    return CheckReport(check, Verdict.PASS, scope, {"blocks": blocks}, None, seed)
