"""
Brute-force lower bounds for gamma_n and gamma_n'.

The oracle walks every degree 1 <= d <= n(g-1), takes the largest h0 the
bounds engine allows, and minimises gamma over the points meeting the
section threshold (n + 1 for gamma_n, 2n for gamma_n').
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from cliffordix.bounds_engine import engine_for, gamma_of
from cliffordix.clifford_index import CliffordResult, gamma_n, gamma_n_prime
from cliffordix.gonality import CurveData
from cliffordix.logger import Logger
from cliffordix.numerics import CliffordixError

logger = Logger()


class OracleInconsistencyError(CliffordixError):
    """The oracle lower bound exceeds a proven upper bound."""


@dataclass(frozen=True)
class OracleResult:
    n: int
    threshold: int
    value: Optional[Fraction]
    argmin_d: Optional[int]
    weakened: bool
    feasible: Tuple[Tuple[int, int], ...]

    @property
    def infeasible(self) -> bool:
        return self.value is None


def oracle_min_gamma(curve: CurveData, n: int, threshold: int) -> OracleResult:
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    engine = engine_for(curve)
    feasible = []
    best, argmin, weakened = None, None, False
    for d in range(1, n * (curve.genus - 1) + 1):
        bound = engine.h0_upper(n, d)
        weakened = weakened or bool(bound.skipped)
        if bound.bound < threshold:
            continue
        feasible.append((d, bound.bound))
        value = gamma_of(n, d, bound.bound)
        if best is None or value < best:
            best, argmin = value, d
    logger.debug(f"oracle rank {n}, threshold {threshold}: min {best} at d={argmin}")
    return OracleResult(n, threshold, best, argmin, weakened, tuple(feasible))


@dataclass(frozen=True)
class CrossCheck:
    n: int
    oracle: OracleResult
    result: CliffordResult

    @property
    def status(self) -> str:
        if self.oracle.infeasible:
            return "infeasible"
        if self.result.is_exact and self.oracle.value == self.result.lo:
            return "equal"
        return "gap"


def _compare(oracle: OracleResult, result: CliffordResult, label: str) -> CrossCheck:
    if oracle.value is not None and oracle.value > result.hi:
        raise OracleInconsistencyError(
            f"{label} rank {oracle.n}: oracle lower bound {oracle.value} exceeds upper bound {result.hi}"
        )
    return CrossCheck(oracle.n, oracle, result)


def oracle_cross_check(curve: CurveData, n: int) -> CrossCheck:
    """Oracle at threshold n + 1 against gamma_n."""
    return _compare(oracle_min_gamma(curve, n, n + 1), gamma_n(curve, n), "gamma_n")


def oracle_cross_check_prime(curve: CurveData, n: int) -> CrossCheck:
    """Oracle at threshold 2n against gamma_n'."""
    return _compare(oracle_min_gamma(curve, n, 2 * n), gamma_n_prime(curve, n), "gamma_n'")
