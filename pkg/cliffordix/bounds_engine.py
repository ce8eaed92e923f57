"""
Upper bounds for h^0 of semistable bundles and related helpers.

Contents:
  * gamma_of               -- Clifford index gamma(E) of a point (n, d, h0)
  * serre_dual             -- (n, d, h0) -> (n, n(2g-2) - d, h0 - d - n(1-g))
  * H0Bound                -- bound value with the rules attaining it
  * BoundsEngine           -- per-curve rule evaluator with hypothesis caches
  * h0_upper               -- module-level shortcut to BoundsEngine.h0_upper
  * SubbundleScenario      -- structural data about a bundle and its subbundles
  * BoundClaim             -- lower bound on gamma(E) with strictness
  * scenario_lower_bound   -- evaluate the subbundle lower-bound statements

Rule ids: R_NEG, R_SMALL, R_CLIFF, R_RE, R_M1..R_M4, R_RK2_HI, R_RK2_LO,
R_LT_DN, R_BELOW_SLOPES, R_AT_DN and R_SERRE for the duality reflection.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from cliffordix.gonality import CurveData
from cliffordix.logger import Logger
from cliffordix.numerics import rat

logger = Logger()

# Catalogue order; provenance and skipped rules are reported in it.
RULE_IDS = (
    "R_NEG", "R_SMALL", "R_CLIFF", "R_RE", "R_M1", "R_M2", "R_M3", "R_M4",
    "R_RK2_HI", "R_RK2_LO", "R_LT_DN", "R_BELOW_SLOPES", "R_AT_DN", "R_SERRE",
)


def gamma_of(n: int, d: int, h0: int) -> Fraction:
    return rat(d - 2 * (h0 - n), n)


def serre_dual(n: int, d: int, h0: int, genus: int) -> Tuple[int, int, int]:
    return n, n * (2 * genus - 2) - d, h0 - d - n * (1 - genus)


@dataclass(frozen=True)
class H0Bound:
    bound: int
    provenance: Tuple[str, ...]
    skipped: Tuple[str, ...] = ()


class BoundsEngine:
    """Evaluates the h^0 rule catalogue for one curve."""

    def __init__(self, curve: CurveData):
        self.curve = curve
        self.genus = curve.genus
        self.seq = curve.sequence
        self._ratio: Dict[int, Optional[bool]] = {}
        self._chain: Dict[int, Optional[bool]] = {}

    # ------------------------------------------------------------------ #
    # Hypotheses on the gonality sequence, certified from interval data.
    # True: holds; False: fails; None: undecided on the available intervals.
    # ------------------------------------------------------------------ #
    def ratio_hypothesis(self, n: int) -> Optional[bool]:
        """d_p/p >= d_n/n for every p < n."""
        if n not in self._ratio:
            seq = self.seq
            verdict: Optional[bool] = True
            for p in range(1, n):
                if seq.lo(p) * n >= seq.hi(n) * p:
                    continue
                if seq.hi(p) * n < seq.lo(n) * p:
                    verdict = False
                    break
                verdict = None
            self._ratio[n] = verdict
        return self._ratio[n]

    def chain_hypothesis(self, n: int) -> Optional[bool]:
        """d_p/p >= d_{p+1}/(p+1) for every p < n."""
        if n not in self._chain:
            seq = self.seq
            verdict: Optional[bool] = True
            for p in range(1, n):
                if seq.lo(p) * (p + 1) >= seq.hi(p + 1) * p:
                    continue
                if seq.hi(p) * (p + 1) < seq.lo(p + 1) * p:
                    verdict = False
                    break
                verdict = None
            self._chain[n] = verdict
        return self._chain[n]

    def dual_span_hypothesis(self, p: int) -> bool:
        """Certified d_q/q >= d_p/p for q < p; the dual span bundle of degree d_p is semistable."""
        return self.ratio_hypothesis(p) is True

    # ------------------------------------------------------------------ #
    # h^0 bounds
    # ------------------------------------------------------------------ #
    def h0_upper(self, n: int, d: int) -> H0Bound:
        """Least upper bound on h^0 over semistable bundles of rank n and degree d."""
        g = self.genus
        if n < 1:
            raise ValueError(f"rank must be >= 1, got {n}")
        if d < 0:
            return H0Bound(0, ("R_NEG",))
        if d == 0:
            return H0Bound(n, ("R_NEG",))
        if d > n * (2 * g - 2):
            return H0Bound(d + n * (1 - g), ("R_NEG",))
        if d > n * (g - 1):
            dual = self.h0_upper(n, n * (2 * g - 2) - d)
            return H0Bound(dual.bound + d + n * (1 - g), dual.provenance + ("R_SERRE",), dual.skipped)

        candidates, skipped = self._window_candidates(n, d)
        best = min(value for _, value in candidates)
        provenance = sorted({rule for rule, value in candidates if value == best}, key=RULE_IDS.index)
        return H0Bound(best, tuple(provenance), tuple(sorted(skipped, key=RULE_IDS.index)))

    def _window_candidates(self, n: int, d: int):
        g = self.genus
        seq = self.seq
        gamma_lo, gamma_hi = self.curve.gamma1.lo, self.curve.gamma1.hi
        candidates: List[Tuple[str, int]] = [("R_CLIFF", d // 2 + n)]
        skipped: List[str] = []

        if d < n:
            candidates.append(("R_SMALL", n - 1))
        if gamma_lo >= 1 and d >= n:
            candidates.append(("R_RE", (d + n) // 2))

        if gamma_lo >= 2:
            if n < d < 2 * n:
                candidates.append(("R_M1", n + (d - n) // g))
            elif d == 2 * n:
                candidates.append(("R_M2", n + n // (g - 1)))
            elif (g - 4) * (d - 2 * n) < 2 * n:
                candidates.append(("R_M3", n + (d - n) // (g - 2)))
            else:
                candidates.append(("R_M4", d // 2))

        if n == 2 and gamma_lo >= 3:
            if 3 * gamma_hi - 1 <= d <= 2 * g - 2:
                candidates.append(("R_RK2_HI", (d - 2 * gamma_lo) // 2 + 2))
            if gamma_hi <= d <= 3 * gamma_lo - 2:
                candidates.append(("R_RK2_LO", (d - gamma_lo) // 4 + 2))

        ratio = self.ratio_hypothesis(n)
        if ratio is True and d < seq.lo(n):
            candidates.append(("R_LT_DN", n))
        elif ratio is None and d < seq.hi(n):
            skipped.append("R_LT_DN")

        if all(d * p < n * seq.lo(p) for p in range(1, n + 1)):
            candidates.append(("R_BELOW_SLOPES", n))
        elif all(d * p < n * seq.hi(p) for p in range(1, n + 1)):
            skipped.append("R_BELOW_SLOPES")

        d_n, d_1 = seq.exact(n), seq.exact(1)
        if d_n is None or d_1 is None:
            if seq.lo(n) <= d <= seq.hi(n):
                skipped.append("R_AT_DN")
        elif d == d_n:
            if d_n == n * d_1:
                candidates.append(("R_AT_DN", 2 * n))
            elif self.chain_hypothesis(n) is True:
                candidates.append(("R_AT_DN", n + 1))
            elif self.chain_hypothesis(n) is None:
                skipped.append("R_AT_DN")

        if skipped:
            logger.debug(f"h0_upper({n}, {d}) skipped {skipped}: hypotheses undecided")
        return candidates, skipped


@lru_cache(maxsize=64)
def engine_for(curve: CurveData) -> BoundsEngine:
    return BoundsEngine(curve)


def h0_upper(curve: CurveData, n: int, d: int) -> H0Bound:
    return engine_for(curve).h0_upper(n, d)


# ---------------------------------------------------------------------- #
# Subbundle scenarios
# ---------------------------------------------------------------------- #
SCENARIO_KINDS = (
    "dual_span",
    "no_section_rich_subbundle",
    "pencil_line_subbundle",
    "subbundle_stratum",
    "corank_one_pencil",
)


@dataclass(frozen=True)
class SubbundleScenario:
    """
    What is known about a semistable bundle E of rank n with h0 sections.

    subbundle_rank / subbundle_h0 describe a distinguished subbundle N;
    section_rich_below says whether some smaller-rank subbundle N' has
    h0(N') > rk N'; pencil_line says whether a line subbundle has h0 >= 2.
    """

    kind: str
    n: int
    h0: int
    subbundle_rank: Optional[int] = None
    subbundle_h0: Optional[int] = None
    section_rich_below: bool = False
    pencil_line: bool = False


@dataclass(frozen=True)
class BoundClaim:
    value: Fraction
    strict: bool
    tag: str


def scenario_lower_bound(curve: CurveData, scenario: SubbundleScenario) -> Optional[BoundClaim]:
    """Lower bound on gamma(E) for the scenario, or None when a hypothesis fails."""
    if scenario.kind not in SCENARIO_KINDS:
        raise ValueError(f"unknown scenario kind '{scenario.kind}'")
    seq = curve.sequence
    engine = engine_for(curve)
    n, h0 = scenario.n, scenario.h0
    if n < 2:
        return None

    if scenario.kind == "dual_span":
        if h0 != n + 1 or not engine.ratio_hypothesis(n):
            return None
        return BoundClaim(rat(seq.lo(n) - 2, n), False, "dual_span")

    if scenario.kind == "no_section_rich_subbundle":
        if h0 < n + 2 or scenario.section_rich_below:
            return None
        return BoundClaim(rat(seq.lo(n) - 2, n), n >= 3, "no_section_rich_subbundle")

    if scenario.kind == "pencil_line_subbundle":
        if h0 > 2 * n - 1 or not scenario.pencil_line:
            return None
        return BoundClaim(Fraction(curve.gamma1.lo), True, "pencil_line_subbundle")

    if scenario.kind == "subbundle_stratum":
        p, sub_h0 = scenario.subbundle_rank, scenario.subbundle_h0
        if p is None or sub_h0 is None or p < 2 or scenario.section_rich_below:
            return None
        s, t = h0 - n, sub_h0 - p
        if s < 1 or Fraction(t) < 1 + rat(2 * s, n) - rat(2, p):
            return None
        if engine.ratio_hypothesis(n) is True and p < n and t >= 1 + rat(2 * (s - 1), n):
            by_n = rat(seq.lo(n) - 2, n)
            by_p = rat(seq.lo(p) - 2, p)
            if by_n > by_p:
                return BoundClaim(by_n, False, "subbundle_stratum")
        return BoundClaim(rat(seq.lo(p) - 2, p), False, "subbundle_stratum")

    # corank_one_pencil
    if (h0 != n + 2 or scenario.subbundle_rank != n - 1 or scenario.subbundle_h0 != n
            or scenario.section_rich_below):
        return None
    if seq.lo(n - 1) * n < seq.hi(n) * (n - 1):
        return None
    return BoundClaim(min(Fraction(curve.gamma1.lo), rat(seq.lo(n) - 2, n)), False, "corank_one_pencil")
