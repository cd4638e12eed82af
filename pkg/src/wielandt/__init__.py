"""Angle distortion between two inner products.

Given Gram matrices ``G1`` and ``G2`` (or an invertible ``A`` with
``G2 = A* A``), the package computes the norm-ratio extremes ``m`` and ``M``,
evaluates sharp bounds on how angles between vectors and lines change when
one inner product is swapped for the other, classifies and constructs the
equality cases, and checks everything against randomized oracles.
"""

__version__ = "0.1.0"

from .angles import AngleReport, full_report, half_tan, line_angle, set_angle, vector_angle
from .bounds import (
    BoundName,
    BoundReport,
    cos_interval,
    cos_product_floor,
    difference_bounds,
    dragomir_reference_bounds,
    evaluate_angle,
    evaluate_pair,
    gw_householder_angle,
    ls_floor,
    tan_bounds,
    wielandt_bound,
    yan_bound,
    yeh_bound,
)
from .errors import (
    DegeneratePencil,
    DependentVectors,
    DimensionError,
    EigFailure,
    NotHermitian,
    NotPositiveDefinite,
    ParseError,
    RangeError,
    WielandtError,
    ZeroVector,
)
from .extremal import (
    EqualityClassification,
    ExtremalPair,
    PhaseCondition,
    Target,
    classify,
    construct_kolotilina,
    construct_main,
    kolotilina_sides,
)
from .oracle import OracleConfig, OracleReport, SuiteReport, hexagon_min, ratio_extremes, run_suite
from .spectrum import (
    DoubleBasis,
    EMembership,
    GramPair,
    SpectralData,
    analyze,
    double_basis,
    e_membership,
    pair_from_matrix,
)
