import pytest

from cliffordix.curve_model import CurveSpec
from cliffordix.gonality import build_curve
from cliffordix.validation import run_checks

EXPECTED_CHECKS = [
    "sequence_axioms",
    "equal_sum_lemma",
    "gamma1_agreement",
    "constructions_within_bounds",
    "serre_duality",
    "clifford_consistency",
    "oracle_soundness",
    "mercat_corollary",
    "below_gamma1",
]


def test_every_check_runs_and_passes(general10):
    checks = run_checks(general10, range(1, 6))
    assert [c.name for c in checks] == EXPECTED_CHECKS
    failed = [(c.name, c.detail) for c in checks if not c.passed]
    assert failed == []


@pytest.mark.parametrize(
    "spec",
    [
        CurveSpec.general(7),
        CurveSpec.hyperelliptic(8),
        CurveSpec.trigonal(9),
        CurveSpec.bielliptic(7),
        CurveSpec.k_gonal(9, 4),
        CurveSpec.smooth_plane(6),
        CurveSpec.nodal_plane(7, 7),
    ],
    ids=lambda s: s.label(),
)
def test_builtin_families_pass(spec):
    checks = run_checks(build_curve(spec), range(1, 5))
    assert all(c.passed for c in checks), [(c.name, c.detail) for c in checks if not c.passed]


def test_ranks_below_gamma1_from_rank_three():
    curve = build_curve(CurveSpec.general(9))
    checks = {c.name: c for c in run_checks(curve, range(3, 9))}
    assert checks["below_gamma1"].passed
    assert checks["below_gamma1"].detail == ""


def test_below_gamma1_not_applicable_off_the_general_family(bielliptic7):
    checks = {c.name: c for c in run_checks(bielliptic7, [1, 2])}
    assert checks["below_gamma1"].detail == "not applicable"


@pytest.mark.parametrize("genus", range(7, 17))
def test_general_curves_stay_below_gamma1_at_every_rank(genus):
    curve = build_curve(CurveSpec.general(genus))
    checks = {c.name: c for c in run_checks(curve, range(3, genus + 4))}
    assert checks["below_gamma1"].passed, checks["below_gamma1"].detail


def test_below_gamma1_not_applicable_in_low_genus():
    checks = {c.name: c for c in run_checks(build_curve(CurveSpec.general(6)), [3, 4])}
    assert checks["below_gamma1"].detail == "not applicable"
