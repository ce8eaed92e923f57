import random
from fractions import Fraction

import pytest

from cliffordix.curve_model import CurveSpec
from cliffordix.gonality import build_curve
from cliffordix.mercat import (
    HOLDS,
    MercatHypothesisError,
    OUT_OF_RANGE,
    VIOLATES,
    conjecture_implies_prime,
    gamma_form_equiv,
    mercat_check,
    rank_two_conjecture_certified,
    verify_cor_d_le_dn,
)


def test_range_two_point():
    check = mercat_check(10, 4, 3, 9, 4)
    assert (check.verdict, check.range_name, check.bound) == (HOLDS, "II", 4)


def test_range_one_point():
    assert mercat_check(12, 5, 2, 15, 4) == mercat_check(12, 5, 2, 15, 4)
    check = mercat_check(12, 5, 2, 15, 4)
    assert (check.verdict, check.range_name, check.bound) == (HOLDS, "I", 4)
    assert mercat_check(12, 5, 2, 15, 5).verdict == VIOLATES
    assert not mercat_check(12, 5, 2, 15, 5).ok


def test_boundary_slope_takes_the_weaker_bound():
    check = mercat_check(10, 2, 2, 8, 4)
    assert check.range_name == "I"
    assert check.bound == 4


def test_out_of_range():
    assert mercat_check(10, 4, 3, 2, 0).verdict == OUT_OF_RANGE
    assert mercat_check(10, 4, 1, 17, 9).verdict == OUT_OF_RANGE
    assert mercat_check(10, 4, 1, 17, 9).ok


def test_gamma_form_agrees_with_h0_form():
    rng = random.Random(20261017)
    for _ in range(10 ** 4):
        genus = rng.randint(4, 40)
        gamma1 = rng.randint(0, (genus - 1) // 2)
        n = rng.randint(1, 8)
        d = rng.randint(n * (gamma1 + 2), n * (2 * genus - 4 - gamma1))
        h0 = rng.randint(0, d + n)
        by_h0, by_gamma = gamma_form_equiv(genus, gamma1, n, d, h0)
        assert by_h0 == by_gamma, (genus, gamma1, n, d, h0)


def test_gamma_form_is_confined_to_range_one():
    assert gamma_form_equiv(10, 4, 2, 12, 4) == (True, True)
    with pytest.raises(MercatHypothesisError):
        gamma_form_equiv(10, 4, 2, 3, 4)
    with pytest.raises(MercatHypothesisError):
        gamma_form_equiv(10, 4, 1, 13, 6)


def test_range_two_bound_stays_below_twice_the_rank():
    for gamma1 in range(0, 6):
        for n in range(1, 6):
            for d in range(n, n * (gamma1 + 2)):
                check = mercat_check(3 * gamma1 + 10, gamma1, n, d, 0)
                assert check.range_name == "II"
                assert check.bound < 2 * n


def test_corollary_on_a_hyperelliptic_curve():
    report = verify_cor_d_le_dn(build_curve(CurveSpec.hyperelliptic(8)), 4)
    assert report.applicable
    assert report.holds
    assert report.checked == 8


def test_corollary_needs_the_chain_hypothesis(plane7):
    report = verify_cor_d_le_dn(plane7, 3)
    assert not report.applicable
    assert "chain" in report.reason


@pytest.mark.parametrize("n", range(1, 6))
def test_corollary_on_the_general_curve(general10, n):
    report = verify_cor_d_le_dn(general10, n)
    assert report.holds


@pytest.mark.parametrize("genus", [6, 8, 10])
def test_conjecture_implies_prime_bound(genus):
    curve = build_curve(CurveSpec.general(genus))
    for n in range(2, 5):
        report = conjecture_implies_prime(curve, n)
        if report.all_hold and report.min_gamma is not None:
            assert report.min_gamma >= Fraction(curve.gamma1_exact)


def test_rank_two_certificate(general10):
    assert rank_two_conjecture_certified(general10)
    assert not rank_two_conjecture_certified(build_curve(CurveSpec.hyperelliptic(10)))


def test_conjecture_check_needs_exact_gamma1():
    curve = build_curve(CurveSpec.custom(9))
    assert curve.gamma1_exact is None
    with pytest.raises(MercatHypothesisError):
        conjecture_implies_prime(curve, 2)
    assert not verify_cor_d_le_dn(curve, 2).applicable
