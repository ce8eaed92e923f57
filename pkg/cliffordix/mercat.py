"""
Mercat's conjectured h^0 bounds and the cases where they are known.

Contents:
  * MercatHypothesisError     -- exact data missing for a conjecture check
  * MercatCheck               -- verdict of a single (n, d, h0) point
  * mercat_check              -- evaluate the conjectured bound at a point
  * gamma_form_equiv          -- both sides of the range-I reformulation
  * CorollaryReport           -- outcome of verify_cor_d_le_dn
  * verify_cor_d_le_dn        -- check the conjecture for every d <= d_n
  * conjecture_implies_prime  -- feasible points with h0 >= 2n vs gamma_1
  * rank_two_conjecture_certified -- d_4 criterion for rank two
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from cliffordix.bounds_engine import engine_for, gamma_of
from cliffordix.gonality import CurveData
from cliffordix.logger import Logger
from cliffordix.numerics import CliffordixError, rat

logger = Logger()

HOLDS = "holds"
VIOLATES = "violates"
OUT_OF_RANGE = "out_of_range"


class MercatHypothesisError(CliffordixError):
    """A check needs data the curve does not pin down."""


@dataclass(frozen=True)
class MercatCheck:
    verdict: str
    range_name: Optional[str] = None
    bound: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.verdict != VIOLATES


def _range_bounds(gamma1: int, n: int, d: int) -> Tuple[int, int]:
    bound_i = (d - gamma1 * n) // 2 + n
    bound_ii = (d - n) // (gamma1 + 1) + n
    return bound_i, bound_ii


def mercat_check(genus: int, gamma1: int, n: int, d: int, h0: int) -> MercatCheck:
    """
    Range I:  gamma_1 + 2 <= mu <= 2g - 4 - gamma_1,  h0 <= (d - gamma_1 n)/2 + n
    Range II: 1 <= mu < gamma_1 + 2,                 h0 <= (d - n)/(gamma_1 + 1) + n
    At mu = gamma_1 + 2 the weaker of the two bounds is used.
    """
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    mu = rat(d, n)
    bound_i, bound_ii = _range_bounds(gamma1, n, d)

    if gamma1 + 2 <= mu <= 2 * genus - 4 - gamma1:
        bound = max(bound_i, bound_ii) if mu == gamma1 + 2 else bound_i
        name = "I"
    elif 1 <= mu < gamma1 + 2:
        bound = bound_ii
        name = "II"
    else:
        return MercatCheck(OUT_OF_RANGE)
    return MercatCheck(HOLDS if h0 <= bound else VIOLATES, name, bound)


def gamma_form_equiv(genus: int, gamma1: int, n: int, d: int, h0: int) -> Tuple[bool, bool]:
    """
    (h0 <= range-I bound, gamma(E) >= gamma_1) for a point with slope in range I.

    The two always agree there. Raises MercatHypothesisError when d/n lies
    outside gamma_1 + 2 <= mu <= 2g - 4 - gamma_1.
    """
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    mu = rat(d, n)
    if not gamma1 + 2 <= mu <= 2 * genus - 4 - gamma1:
        raise MercatHypothesisError(
            f"slope {mu} is outside range I [{gamma1 + 2}, {2 * genus - 4 - gamma1}] for genus {genus}"
        )
    bound_i, _ = _range_bounds(gamma1, n, d)
    return h0 <= bound_i, gamma_of(n, d, h0) >= gamma1


@dataclass
class CorollaryReport:
    n: int
    applicable: bool
    reason: str = ""
    checked: int = 0
    violations: List[Tuple[int, int, MercatCheck]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.applicable and not self.violations


def verify_cor_d_le_dn(curve: CurveData, n: int) -> CorollaryReport:
    """
    Under the chain hypothesis at n, every semistable bundle of rank n and
    degree d <= d_n satisfies the conjectured bound. Checks the largest
    admissible h0 from bounds_engine at each such d.
    """
    gamma1 = curve.gamma1_exact
    if gamma1 is None:
        return CorollaryReport(n, False, "gamma_1 is not exact")
    d_n = curve.sequence.exact(n)
    if d_n is None or curve.sequence.exact(1) is None:
        return CorollaryReport(n, False, f"d_1 or d_{n} is not exact")
    engine = engine_for(curve)
    if engine.chain_hypothesis(n) is not True:
        return CorollaryReport(n, False, "chain hypothesis d_p/p >= d_(p+1)/(p+1) fails")

    report = CorollaryReport(n, True)
    for d in range(1, d_n + 1):
        h0 = engine.h0_upper(n, d).bound
        check = mercat_check(curve.genus, gamma1, n, d, h0)
        report.checked += 1
        if not check.ok:
            report.violations.append((d, h0, check))
    if report.violations:
        logger.warning(f"{curve.spec.label()}: {len(report.violations)} conjecture violations at rank {n}")
    return report


@dataclass(frozen=True)
class ImplicationReport:
    all_hold: bool
    min_gamma: Optional[Fraction]


def conjecture_implies_prime(curve: CurveData, n: int) -> ImplicationReport:
    """Feasible points with h0 >= 2n and mu <= g - 1, tested against the conjecture."""
    gamma1 = curve.gamma1_exact
    if gamma1 is None:
        raise MercatHypothesisError("conjecture_implies_prime needs an exact gamma_1")
    engine = engine_for(curve)
    all_hold, best = True, None
    for d in range(1, n * (curve.genus - 1) + 1):
        h0 = engine.h0_upper(n, d).bound
        if h0 < 2 * n:
            continue
        if not mercat_check(curve.genus, gamma1, n, d, h0).ok:
            all_hold = False
        value = gamma_of(n, d, h0)
        if best is None or value < best:
            best = value
    return ImplicationReport(all_hold, best)


def rank_two_conjecture_certified(curve: CurveData) -> bool:
    """gamma_1 >= 2 and d_4 >= 2 gamma_1 + 4 settle the conjecture for rank two."""
    gamma1 = curve.gamma1_exact
    return gamma1 is not None and gamma1 >= 2 and curve.sequence.lo(4) >= 2 * gamma1 + 4
