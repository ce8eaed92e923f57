"""
Known existence results: semistable bundles with prescribed (n, d, h0).

Every point returned satisfies d <= n(g-1) and is checked by the validation
suite against bounds_engine.h0_upper.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from cliffordix.bounds_engine import engine_for, gamma_of
from cliffordix.curve_model import Family
from cliffordix.gonality import CurveData, brill_noether_bound


@dataclass(frozen=True)
class ConstructionEntry:
    n: int
    d: int
    h0: int
    tag: str

    @property
    def gamma(self) -> Fraction:
        return gamma_of(self.n, self.d, self.h0)


def _divisors(n: int) -> List[int]:
    return [p for p in range(1, n) if n % p == 0]


def achievable_points(curve: CurveData, n: int) -> List[ConstructionEntry]:
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    g = curve.genus
    seq = curve.sequence
    engine = engine_for(curve)
    d_1, d_n = seq.exact(1), seq.exact(n)
    points: List[ConstructionEntry] = [ConstructionEntry(n, brill_noether_bound(g, n), n + 1, "C_BN")]

    if d_n is not None and engine.dual_span_hypothesis(n):
        points.append(ConstructionEntry(n, d_n, n + 1, "C_DUALSPAN"))

    for p in _divisors(n):
        d_p = seq.exact(p)
        if d_p is not None and engine.dual_span_hypothesis(p):
            copies = n // p
            points.append(ConstructionEntry(n, copies * d_p, copies * (p + 1), "C_SUM"))

    if d_n is not None and d_1 is not None and d_n == n * d_1:
        points.append(ConstructionEntry(n, n * d_1, 2 * n, "C_PENCIL"))

    if curve.family is Family.BIELLIPTIC:
        for d in range(2, n * (g - 1) + 1):
            points.append(ConstructionEntry(n, d, d // 2, "C_BIELL"))

    if n > g:
        points.append(ConstructionEntry(n, n + g, n + 1, "C_HIGH"))
    if n >= g - 1:
        points.append(ConstructionEntry(n, 2 * n, n + n // (g - 1), "C_HIGH"))
    if n == g - 2 and curve.gamma1.lo >= 2:
        points.append(ConstructionEntry(n, 2 * g - 3, g - 1, "C_HIGH"))

    if n == 5:
        points.extend(_rank_five_points(curve))

    window = [e for e in points if e.d <= n * (g - 1) and e.h0 >= 1]
    return sorted(window, key=lambda e: (e.d, e.h0, e.tag))


def _rank_five_points(curve: CurveData) -> List[ConstructionEntry]:
    seq = curve.sequence
    engine = engine_for(curve)
    d_2, d_3 = seq.exact(2), seq.exact(3)
    found = []
    if d_2 is not None and d_2 % 2 == 0 and engine.dual_span_hypothesis(2):
        found.append(ConstructionEntry(5, 5 * d_2 // 2, 7, "C_RK5A"))
    if (d_2 is not None and d_3 is not None and 3 * d_2 == 2 * d_3
            and engine.dual_span_hypothesis(2) and engine.dual_span_hypothesis(3)):
        found.append(ConstructionEntry(5, d_2 + d_3, 7, "C_RK5B"))
    return found


def best_construction(curve: CurveData, n: int, threshold: int) -> Optional[Tuple[Fraction, ConstructionEntry]]:
    """Least gamma over achievable points with h0 >= threshold."""
    best = None
    for entry in achievable_points(curve, n):
        if entry.h0 < threshold:
            continue
        if best is None or entry.gamma < best[0]:
            best = (entry.gamma, entry)
    return best
