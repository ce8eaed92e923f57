import pytest

from cliffordix.curve_model import (
    CurveSpec,
    CurveValidationError,
    genus_of,
    known_gamma1,
    noether_decompose,
    validate_spec,
)
from cliffordix.numerics import IntInterval


def test_genus_of_plane_families():
    assert genus_of(CurveSpec.smooth_plane(7)) == 15
    assert genus_of(CurveSpec.smooth_plane(5)) == 6
    assert genus_of(CurveSpec.nodal_plane(7, 7)) == 8
    assert genus_of(CurveSpec.general(11)) == 11


@pytest.mark.parametrize(
    "spec, invariant",
    [
        (CurveSpec.general(3), "genus"),
        (CurveSpec.bielliptic(4), "bielliptic_genus"),
        (CurveSpec.smooth_plane(4), "plane_degree"),
        (CurveSpec.nodal_plane(6, 1), "nodal_degree"),
        (CurveSpec.nodal_plane(7, 8), "nodal_count"),
        (CurveSpec.nodal_plane(7, 0), "nodal_count"),
        (CurveSpec.k_gonal(10, 3), "gonality_k"),
        (CurveSpec.k_gonal(4, 4), "gonality_bound"),
        (CurveSpec.custom(10, gamma1=5), "gamma1_range"),
        (CurveSpec.custom(10, assertions={0: 3}), "assertion_positive"),
        (CurveSpec.custom(10, assertions={2: 7, 3: 6}), "assertion_order"),
        (CurveSpec.custom(10, assertions={1: 5, 4: 5}), "assertion_order"),
    ],
)
def test_validate_spec_names_the_invariant(spec, invariant):
    with pytest.raises(CurveValidationError) as excinfo:
        validate_spec(spec)
    assert excinfo.value.invariant == invariant


def test_validate_spec_accepts_boundary_cases():
    for spec in (
        CurveSpec.general(4),
        CurveSpec.bielliptic(5),
        CurveSpec.smooth_plane(5),
        CurveSpec.nodal_plane(7, 7),
        CurveSpec.k_gonal(5, 4),
        CurveSpec.k_gonal(7, 5),
        CurveSpec.custom(6, gamma1=2, assertions={1: 4}),
    ):
        assert validate_spec(spec) is spec


def test_noether_decompose_examples():
    assert noether_decompose(1) == (1, 1)
    assert noether_decompose(2) == (1, 0)
    assert noether_decompose(3) == (2, 2)
    assert noether_decompose(5) == (2, 0)
    assert noether_decompose(9) == (3, 0)


def test_noether_decompose_is_a_decomposition():
    for r in range(1, 300):
        alpha, beta = noether_decompose(r)
        assert r == alpha * (alpha + 3) // 2 - beta
        assert 0 <= beta <= alpha


def test_known_gamma1_families():
    assert known_gamma1(CurveSpec.general(10)) == IntInterval.exact(4)
    assert known_gamma1(CurveSpec.general(11)) == IntInterval.exact(5)
    assert known_gamma1(CurveSpec.hyperelliptic(9)) == IntInterval.exact(0)
    assert known_gamma1(CurveSpec.trigonal(9)) == IntInterval.exact(1)
    assert known_gamma1(CurveSpec.bielliptic(9)) == IntInterval.exact(2)
    assert known_gamma1(CurveSpec.smooth_plane(7)) == IntInterval.exact(3)
    assert known_gamma1(CurveSpec.nodal_plane(7, 7)) == IntInterval.exact(3)
    assert known_gamma1(CurveSpec.k_gonal(20, 6)) == IntInterval.exact(4)


def test_params_only_lists_meaningful_fields():
    assert CurveSpec.smooth_plane(7).params == {"delta": 7}
    assert CurveSpec.custom(10, assertions={2: 5}).params == {"genus": 10, "assertions": {"d2": 5}}
