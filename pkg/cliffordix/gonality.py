"""
Gonality sequences d_r and the Clifford index gamma_1.

Contents:
  * GonalityInconsistencyError -- propagation produced an empty interval
  * GonalitySequence           -- table of integer intervals d_1 .. d_rmax
  * CurveData                  -- validated spec + genus + gamma_1 + sequence
  * closed_form_entries        -- the exact d_r a family states outright
  * propagate_intervals        -- tighten a sequence to a fixpoint of the sequence axioms
  * gamma1_from_sequence       -- gamma_1 interval implied by a sequence
  * gonality_sequence          -- sequence for a spec
  * build_curve                -- everything downstream modules need about a curve
  * check_sequence_axioms      -- list axiom violations among exact entries
"""

import dataclasses
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from cliffordix.config import DEFAULT_SETTINGS
from cliffordix.curve_model import (
    CurveSpec,
    CurveValidationError,
    Family,
    family_gamma1,
    genus_of,
    noether_decompose,
    validate_spec,
)
from cliffordix.logger import Logger
from cliffordix.numerics import IntInterval

logger = Logger()


class GonalityInconsistencyError(CurveValidationError):
    """A gonality entry was squeezed to lo > hi by one of the sequence axioms."""

    def __init__(self, r: Optional[int], constraint: str, message: str):
        self.r = r
        self.constraint = constraint
        super().__init__(constraint, message)


@dataclass(frozen=True)
class GonalitySequence:
    genus: int
    entries: Tuple[IntInterval, ...]
    gamma1_hint: Optional[IntInterval] = None

    @property
    def r_max(self) -> int:
        return len(self.entries)

    def entry(self, r: int) -> IntInterval:
        if r < 1:
            raise IndexError(f"gonality index must be >= 1, got {r}")
        if r > self.r_max:
            if r >= self.genus:
                return IntInterval.exact(r + self.genus)
            raise IndexError(f"d_{r} lies beyond r_max={self.r_max}")
        return self.entries[r - 1]

    def lo(self, r: int) -> int:
        return self.entry(r).lo

    def hi(self, r: int) -> int:
        return self.entry(r).hi

    def exact(self, r: int) -> Optional[int]:
        e = self.entry(r)
        return e.lo if e.is_exact else None

    def is_exact(self, up_to: Optional[int] = None) -> bool:
        last = self.r_max if up_to is None else up_to
        return all(self.entry(r).is_exact for r in range(1, last + 1))

    def rows(self) -> List[Tuple[int, int, int]]:
        return [(r, e.lo, e.hi) for r, e in enumerate(self.entries, start=1)]


@dataclass(frozen=True)
class CurveData:
    spec: CurveSpec
    genus: int
    gamma1: IntInterval
    sequence: GonalitySequence

    @property
    def family(self) -> Family:
        return self.spec.family

    @property
    def gamma1_exact(self) -> Optional[int]:
        return self.gamma1.lo if self.gamma1.is_exact else None


# ---------------------------------------------------------------------- #
# Closed forms
# ---------------------------------------------------------------------- #
def brill_noether_bound(g: int, r: int) -> int:
    """d_r of a general curve; an upper bound for every curve."""
    return g - g // (r + 1) + r


def _trigonal(g: int, r: int) -> int:
    if r <= (g - 1) // 3:
        return 3 * r
    if r <= g - 1:
        return r + g - 1 - (g - r - 1) // 2
    return r + g


def _quadrigonal(g: int, r: int) -> int:
    if g % 4 == 0 and r == g // 4:
        return g - 1
    if r <= (g - 1) // 4:
        return 4 * r
    if r <= g - 1:
        return r + g - 1 - (g - r - 1) // 3
    return r + g


def _bielliptic(g: int, r: int) -> int:
    if r <= g - 3:
        return 2 * r + 2
    if r == g - 2:
        return 2 * g - 3
    if r == g - 1:
        return 2 * g - 2
    return r + g


def _smooth_plane(delta: int, g: int, r: int) -> int:
    if r >= g:
        return r + g
    alpha, beta = noether_decompose(r)
    return alpha * delta - beta


def closed_form_entries(spec: CurveSpec, r_max: int) -> Dict[int, int]:
    g = genus_of(spec)
    family = spec.family
    ranks = range(1, r_max + 1)

    if family is Family.GENERAL:
        return {r: brill_noether_bound(g, r) for r in ranks}
    if family is Family.HYPERELLIPTIC:
        return {r: 2 * r if r <= g - 1 else r + g for r in ranks}
    if family is Family.TRIGONAL:
        return {r: _trigonal(g, r) for r in ranks}
    if family is Family.GENERAL_K_GONAL:
        if spec.k == 4:
            return {r: _quadrigonal(g, r) for r in ranks}
        k = spec.k
        linear_range = ((g - 4) // 2) // (k - 2)
        forms = {r: k * r for r in range(1, linear_range + 1)}
        forms[1] = k
        return forms
    if family is Family.BIELLIPTIC:
        return {r: _bielliptic(g, r) for r in ranks}
    if family is Family.SMOOTH_PLANE:
        return {r: _smooth_plane(spec.delta, g, r) for r in ranks}
    if family is Family.GENERAL_NODAL_PLANE:
        return {1: spec.delta - 2, 2: spec.delta}
    return dict(spec.assertions)


# ---------------------------------------------------------------------- #
# Propagation
# ---------------------------------------------------------------------- #
class _Table:
    """Mutable lo/hi arrays indexed from 1, raising on the first empty entry."""

    def __init__(self, seq: GonalitySequence):
        self.genus = seq.genus
        self.size = seq.r_max
        self.lo = [0] + [e.lo for e in seq.entries]
        self.hi = [0] + [e.hi for e in seq.entries]
        self.changed = False

    def raise_lo(self, r: int, value: int, tag: str):
        if value > self.lo[r]:
            self.lo[r] = value
            self.changed = True
            self._check(r, tag)

    def lower_hi(self, r: int, value: int, tag: str):
        if value < self.hi[r]:
            self.hi[r] = value
            self.changed = True
            self._check(r, tag)

    def _check(self, r: int, tag: str):
        if self.lo[r] > self.hi[r]:
            raise GonalityInconsistencyError(
                r, tag, f"d_{r} squeezed to [{self.lo[r]}, {self.hi[r]}] by {tag}"
            )

    def freeze(self, gamma1_hint) -> GonalitySequence:
        entries = tuple(IntInterval(self.lo[r], self.hi[r]) for r in range(1, self.size + 1))
        return GonalitySequence(self.genus, entries, gamma1_hint)


def _apply_pointwise(table: _Table, gamma1_lo: Optional[int]):
    g = table.genus
    for r in range(1, table.size + 1):
        if r >= g:
            table.raise_lo(r, r + g, "riemann_roch")
            table.lower_hi(r, r + g, "riemann_roch")
            continue
        table.raise_lo(r, 2 * r, "clifford")
        if r == g - 1:
            table.lower_hi(r, 2 * g - 2, "clifford")
        table.lower_hi(r, brill_noether_bound(g, r), "brill_noether")
        table.lower_hi(r, r * (g - 1), "degree_cap")
        if gamma1_lo is not None:
            table.raise_lo(r, min(gamma1_lo + 2 * r, g + r - 1), "clifford_index")


def _sweep(table: _Table):
    size = table.size
    lo, hi = table.lo, table.hi
    for r in range(2, size + 1):
        table.raise_lo(r, lo[r - 1] + 1, "monotone")
    for r in range(size - 1, 0, -1):
        table.lower_hi(r, hi[r + 1] - 1, "monotone")
    # Splits with r + s > g follow from the Clifford and Riemann-Roch rows.
    for total in range(2, min(size, table.genus) + 1):
        for s in range(1, total):
            t = total - s
            table.lower_hi(total, hi[s] + hi[t], "subadditive")
            table.raise_lo(s, lo[total] - hi[t], "subadditive")


def propagate_intervals(seq: GonalitySequence, iteration_cap_factor: Optional[int] = None) -> GonalitySequence:
    """
    Tighten every entry to the fixpoint of the sequence axioms.

    Raises GonalityInconsistencyError naming the constraint that empties an entry,
    or "iteration_cap" when iteration_cap_factor * r_max sweeps do not settle.
    """
    if iteration_cap_factor is None:
        iteration_cap_factor = DEFAULT_SETTINGS["iteration_cap_factor"]
    table = _Table(seq)
    gamma1_lo = seq.gamma1_hint.lo if seq.gamma1_hint is not None else None
    _apply_pointwise(table, gamma1_lo)

    cap = iteration_cap_factor * table.size
    sweeps = 0
    while True:
        table.changed = False
        _sweep(table)
        sweeps += 1
        if not table.changed:
            break
        if sweeps >= cap:
            raise GonalityInconsistencyError(
                None, "iteration_cap", f"no fixpoint after {sweeps} sweeps (genus {seq.genus}, cap {cap})"
            )
    logger.debug(f"Propagation for genus {seq.genus} settled after {sweeps} sweeps")
    return table.freeze(seq.gamma1_hint)


def gamma1_from_sequence(seq: GonalitySequence) -> IntInterval:
    """gamma_1 = min(d_r - 2r) over r with d_r <= g + r - 2, on interval data."""
    g = seq.genus
    possible, certain = [], []
    for r in range(1, min(g - 1, seq.r_max) + 1):
        e = seq.entry(r)
        if e.lo <= g + r - 2:
            possible.append(e.lo - 2 * r)
        if e.hi <= g + r - 2:
            certain.append(e.hi - 2 * r)
    if not possible:
        raise GonalityInconsistencyError(None, "gamma1_eligibility",
                                         f"no r with d_r <= g + r - 2 in genus {g}")
    cap = (g - 1) // 2
    lo = max(0, min(possible))
    hi = min(min(certain), cap) if certain else cap
    if lo > hi:
        raise GonalityInconsistencyError(None, "gamma1_eligibility",
                                         f"gamma_1 squeezed to [{lo}, {hi}] in genus {g}")
    return IntInterval(lo, hi)


# ---------------------------------------------------------------------- #
# Curve assembly
# ---------------------------------------------------------------------- #
def _initial_sequence(spec: CurveSpec, g: int, size: int) -> GonalitySequence:
    forms = closed_form_entries(spec, size)
    entries = []
    for r in range(1, size + 1):
        if r in forms:
            entries.append(IntInterval.exact(forms[r]))
        else:
            entries.append(IntInterval(1, max(r * (g - 1), r + g)))
    return GonalitySequence(g, tuple(entries))


@lru_cache(maxsize=512)
def build_curve(spec: CurveSpec, r_max: Optional[int] = None) -> CurveData:
    """Validate spec, build and propagate its sequence, reconcile gamma_1."""
    validate_spec(spec)
    g = genus_of(spec)
    if r_max is None:
        r_max = DEFAULT_SETTINGS["r_max_factor"] * g
    size = max(r_max, g, max((r for r, _ in spec.assertions), default=0))

    stated = family_gamma1(spec)
    provisional_only = spec.family is Family.CUSTOM or (
        spec.family is Family.GENERAL_K_GONAL and spec.k >= 5
    )
    hint = None if provisional_only or stated is None else IntInterval.exact(stated)
    seq = propagate_intervals(dataclasses.replace(_initial_sequence(spec, g, size), gamma1_hint=hint))

    for _ in range(size + 1):
        derived = gamma1_from_sequence(seq)
        if stated is None:
            gamma = derived
        elif stated in derived:
            gamma = IntInterval.exact(stated)
        elif spec.family is Family.GENERAL_K_GONAL:
            logger.warning(f"{spec.label()}: gamma_1={stated} outside sequence bound {derived}")
            gamma = derived
        else:
            raise CurveValidationError(
                "gamma1_consistency",
                f"stated gamma_1={stated} is outside the sequence-derived interval {derived}",
            )
        if gamma == seq.gamma1_hint:
            break
        seq = propagate_intervals(dataclasses.replace(seq, gamma1_hint=gamma))

    logger.debug(f"{spec.label()}: genus {g}, gamma_1 {gamma}")
    return CurveData(spec, g, gamma, seq)


def gonality_sequence(spec: CurveSpec, r_max: Optional[int] = None) -> GonalitySequence:
    return build_curve(spec, r_max).sequence


# ---------------------------------------------------------------------- #
# Axiom audit
# ---------------------------------------------------------------------- #
def check_sequence_axioms(seq: GonalitySequence) -> List[str]:
    """Violations of the sequence axioms among exact entries, as 'tag: detail' strings."""
    g = seq.genus
    size = seq.r_max
    d = {r: seq.exact(r) for r in range(1, size + 1)}
    problems = []

    for r in range(1, size + 1):
        v = d[r]
        if v is None:
            continue
        if r < size and d[r + 1] is not None and not v < d[r + 1]:
            problems.append(f"monotone: d_{r}={v} >= d_{r + 1}={d[r + 1]}")
        if v > r * (g - 1):
            problems.append(f"degree_cap: d_{r}={v} > {r * (g - 1)}")
        if r <= g - 1 and v < 2 * r:
            problems.append(f"clifford: d_{r}={v} < {2 * r}")
        if r == g - 1 and v != 2 * g - 2:
            problems.append(f"clifford: d_{g - 1}={v} != {2 * g - 2}")
        if r >= g and v != r + g:
            problems.append(f"riemann_roch: d_{r}={v} != {r + g}")
        if v > brill_noether_bound(g, r):
            problems.append(f"brill_noether: d_{r}={v} > {brill_noether_bound(g, r)}")
        if seq.gamma1_hint is not None and v < min(seq.gamma1_hint.lo + 2 * r, g + r - 1):
            problems.append(f"clifford_index: d_{r}={v} below gamma_1 bound")

    # First m whose exact d_m breaks d_m = m * d_1; an equal split up to it is fine.
    d1 = d.get(1)
    first_break = size + 1
    if d1 is not None:
        first_break = next((m for m in range(1, size + 1) if d[m] is not None and d[m] != m * d1), size + 1)
    # Past r + s = g the Clifford and Riemann-Roch rows make every split strict.
    for total in range(2, min(size, g) + 1):
        c = d[total]
        if c is None:
            continue
        for r in range(1, total // 2 + 1):
            a, b = d[r], d[total - r]
            if a is None or b is None:
                continue
            if c > a + b:
                problems.append(f"subadditive: d_{total}={c} > d_{r}+d_{total - r}={a + b}")
            elif c == a + b and d1 is not None and first_break <= total:
                problems.append(
                    f"equal_sum: d_{r}+d_{total - r}=d_{total} but d_{first_break}={d[first_break]} "
                    f"!= {first_break * d1}"
                )
    return problems
