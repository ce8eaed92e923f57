from fractions import Fraction

import pytest

from cliffordix.clifford_index import CliffordIndexCalculator, gamma_n, gamma_n_prime
from cliffordix.curve_model import CurveSpec
from cliffordix.gonality import build_curve

from conftest import builtin_specs


@pytest.mark.parametrize(
    "spec, n, expected",
    [
        (CurveSpec.general(10), 2, Fraction(7, 2)),
        (CurveSpec.bielliptic(7), 5, Fraction(9, 5)),
        (CurveSpec.hyperelliptic(12), 7, Fraction(0)),
        (CurveSpec.general(12), 20, Fraction(3, 2)),
        (CurveSpec.smooth_plane(7), 2, Fraction(5, 2)),
        (CurveSpec.general(5), 5, Fraction(8, 5)),
        (CurveSpec.trigonal(9), 6, Fraction(1)),
    ],
)
def test_exact_values(spec, n, expected):
    result = gamma_n(build_curve(spec), n)
    assert result.is_exact
    assert result.value == expected
    assert result.kind == "exact"


@pytest.mark.parametrize(
    "n, lo, hi",
    [(3, Fraction(2), Fraction(3)), (4, Fraction(2), Fraction(5, 2)), (5, Fraction(2), Fraction(12, 5))],
)
def test_plane_septic_intervals(plane7, n, lo, hi):
    result = gamma_n(plane7, n)
    assert (result.lo, result.hi) == (lo, hi)
    assert result.kind == "interval"
    assert result.value is None


def test_conditional_value_on_the_plane_septic(plane7):
    assert gamma_n(plane7, 4).mercat_conditional == Fraction(5, 2)


def test_low_clifford_index_is_constant():
    curve = build_curve(CurveSpec.general(4))
    assert gamma_n(curve, 1).value == 1
    assert set(gamma_n(curve, 1).tags()) == {"definition"}
    for n in range(2, 4):
        assert gamma_n(curve, n).value == 1
        assert "low_clifford_index" in gamma_n(curve, n).tags()


def test_sources_name_the_binding_bounds(general10):
    result = gamma_n(general10, 2)
    assert "rank_two" in result.tags()
    assert "universal_bound" in result.tags()
    assert {s.side for s in result.sources} == {"exact", "upper"}


def test_gamma_prime_values():
    assert gamma_n_prime(build_curve(CurveSpec.bielliptic(7)), 3).value == 2
    assert gamma_n_prime(build_curve(CurveSpec.general(9)), 2).value == 4
    assert gamma_n_prime(build_curve(CurveSpec.general(7)), 2).value == 3
    assert gamma_n_prime(build_curve(CurveSpec.smooth_plane(7)), 2).value == 3
    wide = gamma_n_prime(build_curve(CurveSpec.general(13)), 3)
    assert (wide.lo, wide.hi) == (2, 6)
    assert wide.prime


def test_rank_one_is_gamma1(general10):
    assert gamma_n(general10, 1).value == 4
    assert gamma_n_prime(general10, 1).value == 4


@pytest.mark.parametrize("spec", builtin_specs([5, 6, 7, 8, 9, 10, 12], deltas=(5, 6, 7)),
                         ids=lambda s: s.label())
def test_results_sit_inside_the_generic_interval(spec):
    curve = build_curve(spec)
    calc = CliffordIndexCalculator(curve)
    g = curve.genus
    for n in range(1, 9):
        result = calc.gamma_n(n)
        lo, hi = calc.generic_interval(n)
        assert lo <= result.lo <= result.hi <= hi
        assert result.hi <= Fraction(g - g // (n + 1) + n - 2, n)
        assert result.lo <= calc.gamma_n_prime(n).hi
        if n >= g - 3 and curve.gamma1_exact >= 2:
            assert result.hi <= curve.gamma1_exact


def test_rank_must_be_positive(general10):
    with pytest.raises(ValueError):
        gamma_n(general10, 0)


def _near_genus_expected(g, n):
    if n > g:
        return 1 + Fraction(g - 2, n)
    if n == g:
        return 2 - Fraction(2, g)
    if n == g - 1:
        return 2 - Fraction(2, g - 1)
    if n == g - 2:
        return 2 - Fraction(1, g - 2)
    return Fraction(2)


@pytest.mark.parametrize("genus", range(5, 61))
def test_clifford_index_two_curves_near_the_genus(genus):
    for spec in (CurveSpec.bielliptic(genus), CurveSpec.k_gonal(genus, 4)):
        curve = build_curve(spec)
        assert curve.gamma1_exact == 2
        for n in range(max(1, genus - 3), genus + 6):
            result = gamma_n(curve, n)
            assert result.value == _near_genus_expected(genus, n), (spec.label(), n)


def _plane_conditional(delta, n):
    x = {
        3: Fraction((3 * delta + 1) // 2 - 2, 3),
        4: Fraction(delta, 2) - 1,
        5: Fraction(2 * (delta - 1), 5),
    }[n]
    return min(Fraction(delta - 4), x)


@pytest.mark.parametrize("delta", range(5, 31))
def test_smooth_plane_ranks_two_to_five(delta):
    curve = build_curve(CurveSpec.smooth_plane(delta))
    assert gamma_n_prime(curve, 2).value == delta - 4
    if delta >= 6:
        assert gamma_n(curve, 2).value == Fraction(delta, 2) - 1
    for n in (3, 4, 5):
        assert gamma_n(curve, n).mercat_conditional == _plane_conditional(delta, n), n


def test_plane_quintic_conditional_values_are_one():
    curve = build_curve(CurveSpec.smooth_plane(5))
    for n in (3, 4, 5):
        result = gamma_n(curve, n)
        assert result.value == 1
        assert result.mercat_conditional == 1


@pytest.mark.parametrize("genus", range(7, 61))
def test_general_curve_rank_five(genus):
    curve = build_curve(CurveSpec.general(genus))
    expected = Fraction(genus - genus // 6 + 3, 5)
    floor = CliffordIndexCalculator(curve)._rank_five_floor(Fraction(10 ** 6), plane=False)
    assert floor == expected
    assert gamma_n(curve, 5).mercat_conditional == min(Fraction((genus - 1) // 2), expected)
