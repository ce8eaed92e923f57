from fractions import Fraction

import pytest

from cliffordix.bounds_engine import h0_upper
from cliffordix.constructions import achievable_points, best_construction
from cliffordix.curve_model import CurveSpec
from cliffordix.gonality import build_curve

from conftest import builtin_specs


def _triples(curve, n, tag):
    return {(e.n, e.d, e.h0) for e in achievable_points(curve, n) if e.tag == tag}


def test_dual_span_and_brill_noether_points(general10):
    assert (2, 9, 3) in _triples(general10, 2, "C_DUALSPAN")
    assert (2, 9, 3) in _triples(general10, 2, "C_BN")


def test_pencil_power_point():
    curve = build_curve(CurveSpec.hyperelliptic(6))
    assert (3, 6, 6) in _triples(curve, 3, "C_PENCIL")


def test_bielliptic_points(bielliptic7):
    biell = _triples(bielliptic7, 2, "C_BIELL")
    for d in range(4, 13):
        assert (2, d, d // 2) in biell


def test_points_stay_in_window_and_are_sorted(general10):
    for n in range(1, 8):
        points = achievable_points(general10, n)
        assert all(e.d <= n * 9 and e.h0 >= 1 for e in points)
        keys = [(e.d, e.h0, e.tag) for e in points]
        assert keys == sorted(keys)


def test_best_construction(general10):
    gamma, entry = best_construction(general10, 2, 3)
    assert gamma == Fraction(7, 2)
    assert entry.d == 9
    assert best_construction(general10, 1, 50) is None


def test_rank_five_point():
    curve = build_curve(CurveSpec.general(6))
    assert (5, 15, 7) in _triples(curve, 5, "C_RK5A")


@pytest.mark.parametrize("spec", builtin_specs([5, 6, 7, 8, 10, 12], deltas=(5, 6, 7)),
                         ids=lambda s: s.label())
def test_points_respect_h0_bounds(spec):
    curve = build_curve(spec)
    for n in range(1, 7):
        for entry in achievable_points(curve, n):
            assert entry.h0 <= h0_upper(curve, n, entry.d).bound, entry


def test_rank_must_be_positive(general10):
    with pytest.raises(ValueError):
        achievable_points(general10, 0)
