from .curve_model import CurveSpec, Family
from .gonality import build_curve, gonality_sequence
from .clifford_index import gamma_n, gamma_n_prime
