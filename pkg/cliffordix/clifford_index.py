"""
Clifford indices gamma_n and gamma_n' of a curve.

Contents:
  * BoundSource                -- (side, tag) record of a bound that shaped a result
  * CliffordResult             -- exact value or interval, with provenance
  * CliffordInconsistencyError -- two proven statements disagree
  * CliffordIndexCalculator    -- per-curve evaluator with memoised ranks
  * gamma_n / gamma_n_prime    -- module-level entry points

Every gamma_n result is the intersection of the generic interval (bounds
valid on every curve) with the closed forms that apply to the curve. A
closed form that falls outside the generic interval is an inconsistency.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from cliffordix.bounds_engine import engine_for
from cliffordix.constructions import best_construction
from cliffordix.curve_model import Family
from cliffordix.gonality import CurveData
from cliffordix.logger import Logger
from cliffordix.numerics import CliffordixError, rat

logger = Logger()


class CliffordInconsistencyError(CliffordixError):
    """A closed form contradicts the generic bounds, or bounds cross."""


@dataclass(frozen=True)
class BoundSource:
    side: str  # "lower", "upper" or "exact"
    tag: str


@dataclass(frozen=True)
class CliffordResult:
    n: int
    lo: Fraction
    hi: Fraction
    sources: Tuple[BoundSource, ...]
    mercat_conditional: Optional[Fraction] = None
    prime: bool = False

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def kind(self) -> str:
        return "exact" if self.is_exact else "interval"

    @property
    def value(self) -> Optional[Fraction]:
        return self.lo if self.is_exact else None

    def tags(self) -> List[str]:
        return [s.tag for s in self.sources]


class _Collector:
    """Accumulates lower and upper bounds and keeps the binding ones."""

    def __init__(self, n: int):
        self.n = n
        self.lowers: List[Tuple[Fraction, BoundSource]] = []
        self.uppers: List[Tuple[Fraction, BoundSource]] = []
        self.conditional: Optional[Fraction] = None

    def lower(self, value, tag: str, side: str = "lower"):
        self.lowers.append((Fraction(value), BoundSource(side, tag)))

    def upper(self, value, tag: str, side: str = "upper"):
        self.uppers.append((Fraction(value), BoundSource(side, tag)))

    def exact(self, lo, hi, tag: str):
        self.lower(lo, tag, "exact")
        self.upper(hi, tag, "exact")

    def finish(self, prime: bool) -> CliffordResult:
        lo = max(v for v, _ in self.lowers)
        hi = min(v for v, _ in self.uppers)
        if lo > hi:
            low_tags = [s.tag for v, s in self.lowers if v == lo]
            high_tags = [s.tag for v, s in self.uppers if v == hi]
            raise CliffordInconsistencyError(
                f"rank {self.n}: lower bound {lo} ({', '.join(low_tags)}) exceeds "
                f"upper bound {hi} ({', '.join(high_tags)})"
            )
        sources = []
        for v, s in self.lowers:
            if v == lo and s not in sources:
                sources.append(s)
        for v, s in self.uppers:
            if v == hi and s not in sources:
                sources.append(s)
        return CliffordResult(self.n, lo, hi, tuple(sources), self.conditional, prime)


def _plane_rank_value(delta: int, n: int) -> Optional[Fraction]:
    """Conjectural gamma_n of a smooth plane curve of degree delta for n = 3, 4, 5."""
    if n == 3:
        return rat((3 * delta + 1) // 2 - 2, 3)
    if n == 4:
        return rat(delta, 2) - 1
    if n == 5:
        return rat(2 * (delta - 1), 5)
    return None


def _min_with(interval: Tuple[Fraction, Fraction], lo: Fraction, hi: Fraction):
    """min{[a, b], [lo, hi]} as an interval."""
    return min(interval[0], lo), min(interval[1], hi)


class CliffordIndexCalculator:
    """Computes gamma_n and gamma_n' for one curve, memoising every rank."""

    def __init__(self, curve: CurveData):
        self.curve = curve
        self.genus = curve.genus
        self.seq = curve.sequence
        self.engine = engine_for(curve)
        self._cache: Dict[Tuple[str, int, int], CliffordResult] = {}

    # ------------------------------------------------------------------ #
    # Public API
    # ------------------------------------------------------------------ #
    def gamma_n(self, n: int) -> CliffordResult:
        return self._over_gamma1("gamma", n)

    def gamma_n_prime(self, n: int) -> CliffordResult:
        return self._over_gamma1("prime", n)

    def generic_interval(self, n: int) -> Tuple[Fraction, Fraction]:
        """Interval from the bounds valid on every curve, without closed forms."""
        lows, highs = [], []
        for c in self.curve.gamma1.values():
            col = _Collector(n)
            self._generic(col, n, c)
            lows.append(max(v for v, _ in col.lowers))
            highs.append(min(v for v, _ in col.uppers))
        return min(lows), max(highs)

    def _over_gamma1(self, kind: str, n: int) -> CliffordResult:
        if n < 1:
            raise ValueError(f"rank must be >= 1, got {n}")
        gamma1 = self.curve.gamma1
        if gamma1.is_exact:
            return self._evaluate(kind, n, gamma1.lo)

        results, failure = [], None
        for c in gamma1.values():
            try:
                results.append(self._evaluate(kind, n, c))
            except CliffordInconsistencyError as e:
                logger.debug(f"gamma_1={c} excluded at rank {n}: {e}")
                failure = e
        if not results:
            raise failure
        sources = []
        for r in results:
            for s in r.sources:
                if s not in sources:
                    sources.append(s)
        return CliffordResult(n, min(r.lo for r in results), max(r.hi for r in results),
                              tuple(sources), None, kind == "prime")

    def _evaluate(self, kind: str, n: int, c: int) -> CliffordResult:
        key = (kind, n, c)
        if key not in self._cache:
            if kind == "prime":
                self._cache[key] = self._prime(n, c)
            else:
                self._cache[key] = self._gamma(n, c)
        return self._cache[key]

    # ------------------------------------------------------------------ #
    # gamma_n'
    # ------------------------------------------------------------------ #
    def _prime(self, n: int, c: int) -> CliffordResult:
        col = _Collector(n)
        col.lower(0, "nonnegativity")
        if n == 1:
            col.exact(c, c, "definition")
            return col.finish(prime=True)

        if c <= 1:
            col.exact(c, c, "low_clifford_index")
        else:
            col.lower(2, "prime_at_least_two")

        col.upper(c, "divisor_rank")
        for p in _proper_divisors(n):
            if p > 1:
                col.upper(self._evaluate("prime", p, c).hi, "divisor_rank")

        if n == 2:
            if c >= 3:
                col.lower(min(Fraction(c), rat(c, 2) + 2), "rank_two_prime_small")
            col.lower(min(Fraction(c), rat(self.seq.lo(4), 2) - 2), "rank_two_prime")
            if c >= 2 and self.seq.lo(4) >= 2 * c + 4:
                col.lower(c, "rank_two_criterion")
            if self.curve.family is Family.SMOOTH_PLANE:
                col.exact(self.curve.spec.delta - 4, self.curve.spec.delta - 4, "plane_rank_two_prime")

        best = best_construction(self.curve, n, 2 * n)
        if best is not None:
            col.upper(best[0], f"construction:{best[1].tag}")
        return col.finish(prime=True)

    # ------------------------------------------------------------------ #
    # gamma_n
    # ------------------------------------------------------------------ #
    def _generic(self, col: _Collector, n: int, c: int):
        g = self.genus
        seq = self.seq
        col.lower(0, "nonnegativity")
        if n == 1:
            col.upper(c, "definition")
            col.lower(c, "definition")
            return
        if c >= 2:
            col.lower(1, "at_least_one")
            if n <= g - 4:
                col.lower(2, "mercat_rank_le_g_minus_4")

        col.upper(rat(g - g // (n + 1) + n - 2, n), "universal_bound")
        for p in _proper_divisors(n):
            col.upper(self._evaluate("gamma", p, c).hi, "divisor_rank")
        for p in _proper_divisors(n) + [n]:
            if self.engine.dual_span_hypothesis(p):
                col.upper(rat(seq.hi(p) - 2, p), "dual_span_sum")
        col.upper(self._evaluate("prime", n, c).hi, "prime_upper")

        best = best_construction(self.curve, n, n + 1)
        if best is not None:
            col.upper(best[0], f"construction:{best[1].tag}")

    def _gamma(self, n: int, c: int) -> CliffordResult:
        col = _Collector(n)
        self._generic(col, n, c)
        if n == 1:
            col.exact(c, c, "definition")
            return col.finish(prime=False)

        generic_lo = max(v for v, _ in col.lowers)
        generic_hi = min(v for v, _ in col.uppers)
        for lo, hi, tag in self._closed_forms(col, n, c):
            if lo == hi and not generic_lo <= lo <= generic_hi:
                raise CliffordInconsistencyError(
                    f"rank {n}: {tag} gives {lo}, outside generic interval [{generic_lo}, {generic_hi}]"
                )
            col.exact(lo, hi, tag)
        return col.finish(prime=False)

    def _closed_forms(self, col: _Collector, n: int, c: int):
        """Yield (lo, hi, tag) for every closed form that applies; may add plain lower bounds."""
        g = self.genus
        seq = self.seq
        curve = self.curve
        family = curve.family
        forms = []
        delta = curve.spec.delta if family is Family.SMOOTH_PLANE else None
        plane_x = _plane_rank_value(delta, n) if delta is not None else None

        if c <= 1:
            forms.append((Fraction(c), Fraction(c), "low_clifford_index"))
            if plane_x is not None:
                col.conditional = min(Fraction(c), plane_x)
            return forms

        near = _near_genus_value(g, n)
        if near is not None:
            tag = "mercat_rank_gt_genus" if n > g else "rank_near_genus"
            forms.append((near, near, tag))
        if c == 2 and n <= g - 3:
            forms.append((Fraction(2), Fraction(2), "clifford_two_table"))

        prime = self._evaluate("prime", n, c)
        prime_iv = (prime.lo, prime.hi)

        def lo_hi(expr):
            return expr(seq.lo), expr(seq.hi)

        def add_min_form(x_lo, x_hi, tag):
            lo, hi = _min_with(prime_iv, x_lo, x_hi)
            forms.append((lo, hi, tag))
            if x_lo == x_hi:
                col.conditional = min(Fraction(c), x_lo)

        if n == 2:
            x_lo, x_hi = lo_hi(lambda d: rat(d(2), 2) - 1)
            forms.append((min(Fraction(c), x_lo), min(Fraction(c), x_hi), "rank_two"))
            if x_lo == x_hi:
                col.conditional = min(Fraction(c), x_lo)
        elif n == 3:
            if delta is not None:
                add_min_form(plane_x, plane_x, "plane_rank_three")
            elif seq.lo(2) * 3 >= seq.hi(3) * 2:
                x_lo, x_hi = lo_hi(lambda d: rat(d(3) - 2, 3))
                add_min_form(x_lo, x_hi, "rank_three")
        elif n == 4:
            if delta is not None:
                add_min_form(plane_x, plane_x, "plane_rank_four")
            elif seq.lo(3) * 4 >= seq.hi(4) * 3:
                x_lo, x_hi = lo_hi(lambda d: min(rat(d(4) - 2, 4), rat(d(2) - 2, 2)))
                add_min_form(x_lo, x_hi, "rank_four")
        elif n == 5:
            if delta is not None:
                add_min_form(plane_x, plane_x, "plane_rank_five")
            elif family is Family.GENERAL:
                x = rat(g - g // 6 + 3, 5)
                add_min_form(x, x, "rank_five_general")
            if delta is not None or self.engine.chain_hypothesis(5) is True:
                col.lower(self._rank_five_floor(prime.lo, plane=delta is not None), "rank_five_lower")

        d_1, d_n = seq.exact(1), seq.exact(n)
        if d_1 is not None and d_n is not None and d_n == n * d_1:
            forms.append((prime.lo, prime.hi, "pencil_power"))
        return forms

    def _rank_five_floor(self, prime_lo: Fraction, plane: bool) -> Fraction:
        d1, d2, d3, d4, d5 = (Fraction(self.seq.lo(r)) for r in range(1, 6))
        third = (2 * d1 + rat(3, 2) * d2 - 6) / 5 if plane else (2 * d1 + d3 - 6) / 5
        return min(
            prime_lo,
            (d2 - 2) / 2,
            (d5 - 2) / 5,
            (d1 + 2 * d2 - 6) / 5,
            (d1 + d4 - 4) / 5,
            third,
            (3 * d1 + d2 - 8) / 5,
            (d2 + d3 - 5) / 5,
        )


def _proper_divisors(n: int) -> List[int]:
    return [p for p in range(1, n) if n % p == 0]


def _near_genus_value(g: int, n: int) -> Optional[Fraction]:
    """gamma_n for gamma_1 >= 2 and n >= g - 3."""
    if n > g:
        return 1 + rat(g - 2, n)
    if n == g:
        return 2 - rat(2, g)
    if n == g - 1:
        return 2 - rat(2, g - 1)
    if n == g - 2:
        return 2 - rat(1, g - 2)
    if n == g - 3 and n >= 1:
        return Fraction(2)
    return None


@lru_cache(maxsize=64)
def calculator_for(curve: CurveData) -> CliffordIndexCalculator:
    return CliffordIndexCalculator(curve)


def gamma_n(curve: CurveData, n: int) -> CliffordResult:
    return calculator_for(curve).gamma_n(n)


def gamma_n_prime(curve: CurveData, n: int) -> CliffordResult:
    return calculator_for(curve).gamma_n_prime(n)
