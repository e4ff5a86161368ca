"""Turaev-Viro invariants, hyperbolic volumes and volume-conjecture fits for
Frigerio's manifolds M_g."""

from .asymptotics import (
    AffineGenusRegressor,
    FitResult,
    QVSeries,
    VolumeConjectureRegressor,
    fit_affine,
    fit_fixed_volume,
    fit_free,
)
from .coloring import Coloring, count_admissible, enumerate_fast, enumerate_oracle
from .errors import AdmissibilityError, DomainError, ParseError, RankDeficiencyError
from .halfint import ColorRange, HalfInt, is_admissible_iik, is_admissible_triple
from .hyperbolic import (
    FrigerioAngles,
    TetrahedronAngles,
    frigerio_angles,
    gram_det,
    manifold_volume,
    tetrahedron_volume,
    u_function,
    z_plus_minus,
)
from .numerics import PrecisionContext, dilog, principal_sqrt
from .sixj import QuantumLevel, SixJCache, delta_coeff, edge_weight, quantum_factorial, quantum_number, sixj_symbol
from .turaev_viro import TVResult, coloring_term, qv_invariant, tv_invariant, tv_transfer_matrix

__version__ = "0.1.0"
