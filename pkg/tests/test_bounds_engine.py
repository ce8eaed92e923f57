import random
from fractions import Fraction

import pytest

from cliffordix.bounds_engine import (
    RULE_IDS,
    SubbundleScenario,
    engine_for,
    gamma_of,
    h0_upper,
    scenario_lower_bound,
    serre_dual,
)
from cliffordix.curve_model import CurveSpec
from cliffordix.gonality import build_curve


def test_gamma_of():
    assert gamma_of(2, 9, 3) == Fraction(7, 2)
    assert gamma_of(1, 6, 2) == 4


def test_serre_dual_is_an_involution():
    for n, d, h0 in [(2, 9, 3), (3, 0, 3), (4, 30, 12)]:
        assert serre_dual(*serre_dual(n, d, h0, 10), 10) == (n, d, h0)


@pytest.mark.parametrize("genus", [4, 5, 7, 10, 16, 31, 60])
def test_serre_dual_preserves_gamma(genus):
    rng = random.Random(genus)
    for _ in range(10 ** 4):
        n = rng.randint(1, 12)
        d = rng.randint(0, n * (2 * genus - 2))
        h0 = rng.randint(max(0, d + n * (1 - genus)), d + n)
        dual = serre_dual(n, d, h0, genus)
        assert dual[2] >= 0
        assert gamma_of(*dual) == gamma_of(n, d, h0), (n, d, h0)


def test_mercat_rank_bound(general10):
    result = h0_upper(general10, 3, 6)
    assert result.bound == 3
    assert "R_M2" in result.provenance


def test_below_d_n_bound(bielliptic7):
    result = h0_upper(bielliptic7, 2, 5)
    assert result.bound == 2
    assert "R_LT_DN" in result.provenance


def test_negative_and_zero_degree(general10):
    assert h0_upper(general10, 4, -1).bound == 0
    assert h0_upper(general10, 4, 0).bound == 4


def test_reflected_degree_uses_serre_duality(general10):
    result = h0_upper(general10, 2, 28)
    assert result.bound == 12
    assert "R_SERRE" in result.provenance


@pytest.mark.parametrize("spec", [CurveSpec.general(10), CurveSpec.bielliptic(7), CurveSpec.smooth_plane(7)],
                         ids=lambda s: s.label())
def test_rules_are_reported_in_catalogue_order(spec):
    curve = build_curve(spec)
    for n in range(1, 7):
        for d in range(-2, n * (2 * curve.genus - 2) + 3):
            result = h0_upper(curve, n, d)
            for tags in (result.provenance, result.skipped):
                assert set(tags) <= set(RULE_IDS)
                assert list(tags) == sorted(tags, key=RULE_IDS.index)


def test_rank_two_at_d_n(general10):
    assert h0_upper(general10, 2, 9).bound == 3


def test_riemann_roch_above_canonical_range(general10):
    assert h0_upper(general10, 2, 40).bound == 40 + 2 * (1 - 10)


@pytest.mark.parametrize("spec", [CurveSpec.general(8), CurveSpec.trigonal(7), CurveSpec.smooth_plane(6)],
                         ids=lambda s: s.label())
def test_never_above_clifford(spec):
    curve = build_curve(spec)
    g = curve.genus
    for n in range(1, 5):
        for d in range(0, n * (2 * g - 2) + 1):
            assert 0 <= h0_upper(curve, n, d).bound <= d // 2 + n


def test_hypotheses(general10, plane7):
    engine = engine_for(general10)
    assert engine.ratio_hypothesis(5) is True
    assert engine.chain_hypothesis(5) is True
    assert engine_for(plane7).chain_hypothesis(3) is False


def test_dual_span_scenario(general10):
    claim = scenario_lower_bound(general10, SubbundleScenario("dual_span", 2, 3))
    assert claim.value == Fraction(7, 2)
    assert not claim.strict


def test_no_section_rich_scenario_is_strict_from_rank_three(general10):
    claim = scenario_lower_bound(general10, SubbundleScenario("no_section_rich_subbundle", 3, 5))
    assert claim.strict
    assert scenario_lower_bound(
        general10, SubbundleScenario("no_section_rich_subbundle", 3, 5, section_rich_below=True)) is None


def test_pencil_line_scenario_needs_few_sections(general10):
    assert scenario_lower_bound(general10, SubbundleScenario("pencil_line_subbundle", 3, 6, pencil_line=True)) is None
    claim = scenario_lower_bound(general10, SubbundleScenario("pencil_line_subbundle", 3, 5, pencil_line=True))
    assert claim.value == 4 and claim.strict


def test_subbundle_stratum_scenario(general10):
    scenario = SubbundleScenario("subbundle_stratum", 4, 6, subbundle_rank=2, subbundle_h0=4)
    assert scenario_lower_bound(general10, scenario).value == Fraction(7, 2)


def test_corank_one_pencil_scenario(general10):
    scenario = SubbundleScenario("corank_one_pencil", 3, 5, subbundle_rank=2, subbundle_h0=3)
    assert scenario_lower_bound(general10, scenario).value == 3


def test_unknown_scenario_kind(general10):
    with pytest.raises(ValueError):
        scenario_lower_bound(general10, SubbundleScenario("bogus", 3, 4))
