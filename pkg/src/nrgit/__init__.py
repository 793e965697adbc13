"""Exact Hilbert-Mumford stability computations for non-reductive actions.

The core is a generic rank-2 torus engine over the coefficient domain
a*N + b (N a formal large parameter), plus a complete treatment of n
unordered points on the projective line acted on by the Borel subgroup
of SL(2): closed-form classification, a strong ample envelope inside
P^2 x P^n with brute-force cross-checks, wall-and-chamber variation of
the linearization, and flip data at interior walls.
"""

from .polytope import (
    AffineN,
    DegreeOverflowError,
    N,
    OriginLocation,
    Weight2,
    WeightSet,
    ZERO,
    cmp,
    contains_origin,
    scaled_minkowski,
    weight2,
)
from .hilbert_mumford import (
    OnePS,
    PointSupport,
    TorusAction,
    mu,
    mu_sign,
    torus_status,
    weight_polytope,
    witness_lambdas,
    witness_status,
)
from .binary_forms import (
    Divisor,
    LimitDirection,
    LinParam,
    MoveStep,
    Status,
    ZERO_SLOT,
    central_divisor,
    classify_borel,
    classify_sl2,
    classify_unipotent,
    move_root_to_zero,
    sequiv_witness,
    torus_limit,
)
from .envelope import (
    EnvParams,
    EnvPoint,
    EnvelopeReport,
    concrete_torus_case_status,
    embed_divisor,
    enumerate_env_points,
    fixed_point_weights,
    group_status,
    n_threshold,
    point_polytope,
    strong_envelope_report,
    torus_case_status,
    unipotent_case_status,
    unipotent_status,
)
from .vgit import (
    FlipData,
    QuotientKind,
    QuotientProfile,
    WallChamber,
    WallKind,
    chamber_profile,
    flip_data,
    slice_weights,
    wall_values,
    walls,
)
from .oracle import (
    DiffReport,
    DiffRow,
    GroupKind,
    GroupMoveSet,
    ProfileCensus,
    census_size_formula,
    diff_report,
    enumerate_profiles,
    moves_for,
    partition_count,
    worst_case_status,
)

__version__ = "0.1.0"

__all__ = [
    "AffineN",
    "DegreeOverflowError",
    "N",
    "OriginLocation",
    "Weight2",
    "WeightSet",
    "ZERO",
    "cmp",
    "contains_origin",
    "scaled_minkowski",
    "weight2",
    "OnePS",
    "PointSupport",
    "TorusAction",
    "mu",
    "mu_sign",
    "torus_status",
    "weight_polytope",
    "witness_lambdas",
    "witness_status",
    "Divisor",
    "LimitDirection",
    "LinParam",
    "MoveStep",
    "Status",
    "ZERO_SLOT",
    "central_divisor",
    "classify_borel",
    "classify_sl2",
    "classify_unipotent",
    "move_root_to_zero",
    "sequiv_witness",
    "torus_limit",
    "EnvParams",
    "EnvPoint",
    "EnvelopeReport",
    "concrete_torus_case_status",
    "embed_divisor",
    "enumerate_env_points",
    "fixed_point_weights",
    "group_status",
    "n_threshold",
    "point_polytope",
    "strong_envelope_report",
    "torus_case_status",
    "unipotent_case_status",
    "unipotent_status",
    "FlipData",
    "QuotientKind",
    "QuotientProfile",
    "WallChamber",
    "WallKind",
    "chamber_profile",
    "flip_data",
    "slice_weights",
    "wall_values",
    "walls",
    "DiffReport",
    "DiffRow",
    "GroupKind",
    "GroupMoveSet",
    "ProfileCensus",
    "census_size_formula",
    "diff_report",
    "enumerate_profiles",
    "moves_for",
    "partition_count",
    "worst_case_status",
    "__version__",
]
