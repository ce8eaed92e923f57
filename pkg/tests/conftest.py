import pytest

from cliffordix.curve_model import CurveSpec
from cliffordix.gonality import build_curve


@pytest.fixture
def general10():
    return build_curve(CurveSpec.general(10))


@pytest.fixture
def bielliptic7():
    return build_curve(CurveSpec.bielliptic(7))


@pytest.fixture
def plane7():
    return build_curve(CurveSpec.smooth_plane(7))


@pytest.fixture
def hyperelliptic12():
    return build_curve(CurveSpec.hyperelliptic(12))


def builtin_specs(genera, deltas=(5, 6, 7, 8)):
    """Every built-in family with an exact closed-form sequence, over the given genera."""
    specs = []
    for g in genera:
        specs.append(CurveSpec.general(g))
        specs.append(CurveSpec.hyperelliptic(g))
        specs.append(CurveSpec.trigonal(g))
        if g >= 5:
            specs.append(CurveSpec.bielliptic(g))
            specs.append(CurveSpec.k_gonal(g, 4))
    specs.extend(CurveSpec.smooth_plane(d) for d in deltas)
    return specs
