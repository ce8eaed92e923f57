"""
Consistency checks across the whole pipeline for one curve.

run_checks returns one CheckResult per check; nothing raises past it.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List

from cliffordix.bounds_engine import engine_for, serre_dual
from cliffordix.clifford_index import gamma_n, gamma_n_prime
from cliffordix.config import DEFAULT_SETTINGS
from cliffordix.constructions import achievable_points
from cliffordix.curve_model import Family
from cliffordix.gonality import CurveData, check_sequence_axioms, gamma1_from_sequence
from cliffordix.mercat import verify_cor_d_le_dn
from cliffordix.numerics import CliffordixError, rat
from cliffordix.oracle import oracle_cross_check


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _sequence_checks(curve: CurveData) -> List[CheckResult]:
    problems = check_sequence_axioms(curve.sequence)
    equal_sum = [p for p in problems if p.startswith("equal_sum")]
    axioms = [p for p in problems if not p.startswith("equal_sum")]
    results = [
        CheckResult("sequence_axioms", not axioms, "; ".join(axioms[:5])),
        CheckResult("equal_sum_lemma", not equal_sum, "; ".join(equal_sum[:5])),
    ]
    derived = gamma1_from_sequence(curve.sequence)
    agree = derived.lo <= curve.gamma1.lo and curve.gamma1.hi <= derived.hi
    results.append(CheckResult("gamma1_agreement", agree,
                               f"gamma_1 {curve.gamma1} vs sequence {derived}"))
    return results


def _construction_check(curve: CurveData, ranks: Iterable[int]) -> CheckResult:
    engine = engine_for(curve)
    for n in ranks:
        for entry in achievable_points(curve, n):
            bound = engine.h0_upper(n, entry.d).bound
            if entry.h0 > bound:
                return CheckResult("constructions_within_bounds", False,
                                   f"{entry.tag} ({n}, {entry.d}, {entry.h0}) exceeds h0 bound {bound}")
    return CheckResult("constructions_within_bounds", True)


def _serre_check(curve: CurveData, ranks: Iterable[int]) -> CheckResult:
    g = curve.genus
    engine = engine_for(curve)
    for n in ranks:
        for d in range(0, n * (2 * g - 2) + 1):
            h0 = engine.h0_upper(n, d).bound
            dual = serre_dual(n, d, h0, g)
            if serre_dual(*dual, g) != (n, d, h0):
                return CheckResult("serre_duality", False, f"involution fails at ({n}, {d}, {h0})")
            if h0 - engine.h0_upper(n, dual[1]).bound != d + n * (1 - g):
                return CheckResult("serre_duality", False, f"bounds not dual at ({n}, {d})")
    return CheckResult("serre_duality", True)


def _clifford_check(curve: CurveData, ranks: Iterable[int]) -> CheckResult:
    g = curve.genus
    try:
        for n in ranks:
            result, prime = gamma_n(curve, n), gamma_n_prime(curve, n)
            if result.hi > rat(g - g // (n + 1) + n - 2, n):
                return CheckResult("clifford_consistency", False, f"gamma_{n} above universal bound")
            if result.lo > prime.hi:
                return CheckResult("clifford_consistency", False, f"gamma_{n} above gamma_{n}'")
            for p in range(1, n):
                if n % p == 0 and result.hi > gamma_n(curve, p).hi:
                    return CheckResult("clifford_consistency", False, f"gamma_{n} above gamma_{p}")
    except CliffordixError as e:
        return CheckResult("clifford_consistency", False, str(e))
    return CheckResult("clifford_consistency", True)


def _oracle_check(curve: CurveData, ranks: Iterable[int]) -> CheckResult:
    if curve.genus > DEFAULT_SETTINGS["oracle_max_genus"]:
        return CheckResult("oracle_soundness", True, "genus above oracle cap, skipped")
    statuses = []
    try:
        for n in ranks:
            if n > DEFAULT_SETTINGS["oracle_max_rank"]:
                continue
            statuses.append(f"{n}:{oracle_cross_check(curve, n).status}")
    except CliffordixError as e:
        return CheckResult("oracle_soundness", False, str(e))
    return CheckResult("oracle_soundness", True, " ".join(statuses))


def _mercat_check(curve: CurveData, ranks: Iterable[int]) -> CheckResult:
    for n in ranks:
        report = verify_cor_d_le_dn(curve, n)
        if report.applicable and report.violations:
            d, h0, _ = report.violations[0]
            return CheckResult("mercat_corollary", False, f"rank {n}: ({d}, {h0}) violates the bound")
    return CheckResult("mercat_corollary", True)


def _below_gamma1_check(curve: CurveData, ranks: Iterable[int]) -> CheckResult:
    """General curves of genus >= 7 have gamma_n < gamma_1 for every n >= 3."""
    c = curve.gamma1_exact
    if curve.family is not Family.GENERAL or curve.genus < 7 or c is None:
        return CheckResult("below_gamma1", True, "not applicable")
    for n in ranks:
        if n >= 3 and not gamma_n(curve, n).hi < Fraction(c):
            return CheckResult("below_gamma1", False, f"gamma_{n} not below gamma_1={c}")
    return CheckResult("below_gamma1", True)


def run_checks(curve: CurveData, ranks: Iterable[int]) -> List[CheckResult]:
    ranks = list(ranks)
    results = _sequence_checks(curve)
    results.append(_construction_check(curve, ranks))
    results.append(_serre_check(curve, ranks))
    results.append(_clifford_check(curve, ranks))
    results.append(_oracle_check(curve, ranks))
    results.append(_mercat_check(curve, ranks))
    results.append(_below_gamma1_check(curve, ranks))
    return results
