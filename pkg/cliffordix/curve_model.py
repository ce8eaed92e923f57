"""
Curve families and their validated parameters.

Contents:
  * Family                -- enumeration of the supported curve families
  * CurveSpec             -- immutable description of a curve (family + parameters)
  * CurveValidationError  -- raised when a spec violates a family invariant
  * validate_spec         -- check every invariant of a spec
  * genus_of              -- genus of a validated spec
  * known_gamma1          -- Clifford index gamma_1 as an integer interval
  * noether_decompose     -- r = a(a+3)/2 - b with 0 <= b <= a
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from cliffordix.numerics import CliffordixError, IntInterval


class CurveValidationError(CliffordixError):
    """Raised when a curve spec violates one of its family invariants."""

    def __init__(self, invariant: str, message: str):
        self.invariant = invariant
        super().__init__(f"{invariant}: {message}")


class Family(Enum):
    GENERAL = "general"
    HYPERELLIPTIC = "hyperelliptic"
    TRIGONAL = "trigonal"
    GENERAL_K_GONAL = "kgonal"
    BIELLIPTIC = "bielliptic"
    SMOOTH_PLANE = "plane"
    GENERAL_NODAL_PLANE = "nodal"
    CUSTOM = "custom"


@dataclass(frozen=True)
class CurveSpec:
    """A curve described by family and parameters; validated by validate_spec."""

    family: Family
    genus: Optional[int] = None
    k: Optional[int] = None
    delta: Optional[int] = None
    nodes: Optional[int] = None
    gamma1: Optional[int] = None
    assertions: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)

    # ------------------------------------------------------------------ #
    # Constructors
    # ------------------------------------------------------------------ #
    @classmethod
    def general(cls, genus: int) -> "CurveSpec":
        return cls(Family.GENERAL, genus=genus)

    @classmethod
    def hyperelliptic(cls, genus: int) -> "CurveSpec":
        return cls(Family.HYPERELLIPTIC, genus=genus)

    @classmethod
    def trigonal(cls, genus: int) -> "CurveSpec":
        return cls(Family.TRIGONAL, genus=genus)

    @classmethod
    def k_gonal(cls, genus: int, k: int) -> "CurveSpec":
        return cls(Family.GENERAL_K_GONAL, genus=genus, k=k)

    @classmethod
    def bielliptic(cls, genus: int) -> "CurveSpec":
        return cls(Family.BIELLIPTIC, genus=genus)

    @classmethod
    def smooth_plane(cls, delta: int) -> "CurveSpec":
        return cls(Family.SMOOTH_PLANE, delta=delta)

    @classmethod
    def nodal_plane(cls, delta: int, nodes: int) -> "CurveSpec":
        return cls(Family.GENERAL_NODAL_PLANE, delta=delta, nodes=nodes)

    @classmethod
    def custom(cls, genus: int, gamma1: Optional[int] = None, assertions=None) -> "CurveSpec":
        pairs = tuple(sorted((int(r), int(d)) for r, d in dict(assertions or {}).items()))
        return cls(Family.CUSTOM, genus=genus, gamma1=gamma1, assertions=pairs)

    # ------------------------------------------------------------------ #
    # Presentation
    # ------------------------------------------------------------------ #
    @property
    def params(self) -> Dict[str, object]:
        """Only the parameters meaningful for the family."""
        result: Dict[str, object] = {}
        for name in ("genus", "k", "delta", "nodes", "gamma1"):
            value = getattr(self, name)
            if value is not None:
                result[name] = value
        if self.assertions:
            result["assertions"] = {f"d{r}": d for r, d in self.assertions}
        return result

    def label(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.params.items() if k != "assertions")
        return f"{self.family.value}({inner})"


def _require(condition: bool, invariant: str, message: str):
    if not condition:
        raise CurveValidationError(invariant, message)


def _require_int(spec: CurveSpec, name: str):
    value = getattr(spec, name)
    _require(isinstance(value, int) and not isinstance(value, bool),
             f"{name}_present", f"{spec.family.value} requires integer parameter '{name}'")
    return value


def validate_spec(spec: CurveSpec) -> CurveSpec:
    """Raise CurveValidationError naming the first violated invariant."""
    family = spec.family

    if family in (Family.SMOOTH_PLANE, Family.GENERAL_NODAL_PLANE):
        delta = _require_int(spec, "delta")
        if family is Family.SMOOTH_PLANE:
            _require(delta >= 5, "plane_degree", f"smooth plane degree must be >= 5, got {delta}")
        else:
            nodes = _require_int(spec, "nodes")
            _require(delta >= 7, "nodal_degree", f"nodal plane degree must be >= 7, got {delta}")
            max_nodes = (delta * delta - 7 * delta + 14) // 2
            _require(1 <= nodes <= max_nodes, "nodal_count",
                     f"node count must lie in [1, {max_nodes}] for degree {delta}, got {nodes}")
        return spec

    genus = _require_int(spec, "genus")
    if family is Family.BIELLIPTIC:
        _require(genus >= 5, "bielliptic_genus", f"bielliptic genus must be >= 5, got {genus}")
    else:
        _require(genus >= 4, "genus", f"genus must be >= 4, got {genus}")

    if family is Family.GENERAL_K_GONAL:
        k = _require_int(spec, "k")
        _require(k >= 4, "gonality_k", f"k must be >= 4, got {k}")
        _require(k <= (genus + 3) // 2, "gonality_bound",
                 f"k={k} exceeds the maximal gonality {(genus + 3) // 2} in genus {genus}")

    if family is Family.CUSTOM:
        if spec.gamma1 is not None:
            _require(0 <= spec.gamma1 <= (genus - 1) // 2, "gamma1_range",
                     f"gamma_1 must lie in [0, {(genus - 1) // 2}], got {spec.gamma1}")
        previous, previous_d = 0, 0
        for r, d in spec.assertions:
            _require(r >= 1 and d >= 1, "assertion_positive", f"asserted d_{r}={d} must be positive")
            _require(r > previous, "assertion_order", f"asserted ranks must be strictly increasing at r={r}")
            _require(d > previous_d, "assertion_order",
                     f"asserted d_{r}={d} must exceed d_{previous}={previous_d}")
            previous, previous_d = r, d
    return spec


def genus_of(spec: CurveSpec) -> int:
    validate_spec(spec)
    if spec.family is Family.SMOOTH_PLANE:
        return (spec.delta - 1) * (spec.delta - 2) // 2
    if spec.family is Family.GENERAL_NODAL_PLANE:
        return (spec.delta - 1) * (spec.delta - 2) // 2 - spec.nodes
    return spec.genus


def family_gamma1(spec: CurveSpec) -> Optional[int]:
    """gamma_1 stated by the family alone, before any sequence cross-check."""
    g = genus_of(spec)
    family = spec.family
    if family is Family.GENERAL:
        return (g - 1) // 2
    if family is Family.HYPERELLIPTIC:
        return 0
    if family is Family.TRIGONAL:
        return 1
    if family is Family.GENERAL_K_GONAL:
        return spec.k - 2
    if family is Family.BIELLIPTIC:
        return 2
    if family is Family.SMOOTH_PLANE:
        return spec.delta - 4
    if family is Family.GENERAL_NODAL_PLANE:
        return spec.delta - 4
    return spec.gamma1


def known_gamma1(spec: CurveSpec, r_max: Optional[int] = None) -> IntInterval:
    """
    gamma_1 of the curve as an integer interval.

    Families with a classical value return it exactly. GeneralKGonal with
    k >= 5 and Custom specs go through the gonality sequence.
    """
    # Deferred: gonality imports this module
    from cliffordix.gonality import build_curve

    return build_curve(spec, r_max=r_max).gamma1


def noether_decompose(r: int) -> Tuple[int, int]:
    """Unique (alpha, beta) with r = alpha(alpha+3)/2 - beta and 0 <= beta <= alpha."""
    if r < 1:
        raise ValueError(f"noether_decompose needs r >= 1, got {r}")
    alpha = 1
    while alpha * (alpha + 3) // 2 < r:
        alpha += 1
    return alpha, alpha * (alpha + 3) // 2 - r
