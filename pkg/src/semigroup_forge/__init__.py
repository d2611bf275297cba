"""Numerical semigroups, curve value semigroups and minimal embedding dimension."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .honest import (
    MeVerdict,
    Method,
    Witness,
    four_six_family_check,
    minimal_embedding_dimension,
    ordering_case,
    theorem1_test,
    witness_curve,
)
from .kunz import (
    Face,
    FaceClass,
    KunzPoint,
    classify_face,
    embedding_dim_from_face,
    enumerate_points,
    kite_projection,
    kunz_point_of,
    semigroup_of_point,
)
from .puiseux import (
    DivisorData,
    PuiseuxCharacteristic,
    canonical_plane_curve,
    characteristic_from_support,
    divisor_factor_vectors,
    generators_to_puiseux,
    m_sieve,
    planar_e_bound,
    puiseux_to_generators,
    teissier_planarity,
    teissier_upper_bound,
    validate_characteristic,
)
from .semigroup import NumericalSemigroup, from_generators, naturals
from .series import (
    MonomialPolynomial,
    ParamCurve,
    TruncatedSeries,
    pullback,
    semigroup_of_curve,
    value_pivots,
    verify_witness,
)
