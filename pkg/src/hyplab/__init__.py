"""Bicomplex/hyperbolic scalar algebra, D-valued norms on finite modules,
operator bounds via singular values, and mechanized theorem checks."""

__version__ = "0.1.0"

from .errors import (
    DimensionMismatch,
    EmptySet,
    HyplabError,
    HypothesisFailed,
    InvalidInput,
    NoConvergence,
    NotConverged,
    NotInRange,
    NotStrictlyPositive,
    NotSurjective,
    PreconditionViolated,
    ShapeMismatch,
    UnsupportedNorm,
    ZeroDivisor,
)
from .hyperscalar import (
    E1,
    E2,
    ONE,
    UNIT_I,
    UNIT_J,
    UNIT_K,
    ZERO,
    ZERO_DIVISOR_TOL,
    Bicomplex,
    DPlus,
    Hyperbolic,
    OrderRel,
    bc_add,
    bc_from_cartesian,
    bc_inverse,
    bc_mul,
    bc_scale,
    bc_sub,
    bc_to_cartesian,
    dplus_inverse,
    euclid_norm,
    hyp_abs,
    hyp_compare,
    hyp_inf,
    hyp_leq,
    hyp_sup,
    knorm,
)
from .dmodule import (
    BCVector,
    DNormConfig,
    DSeminorm,
    SeriesReport,
    abs_summability_check,
    geometric_terms,
    seminorm_eval,
    series_sum,
    v_alpha_member,
    v_alpha_member_closed,
    vec_dnorm,
)
from .dop import (
    BCMatrix,
    OperatorNormReport,
    SolveReport,
    SurjectivityReport,
    mat_apply,
    min_norm_solve,
    op_dnorm,
    open_mapping_delta,
    sigma_extremes,
    surjectivity_check,
)
from .theoremlab import (
    BallScaleReport,
    ContinuityReport,
    OpenMapReport,
    SubaddReport,
    UBPReport,
    ZabreikoTrace,
    ball_scaling_check,
    check_stream,
    continuity_bound_check,
    countable_subadd_check,
    open_mapping_verify,
    ubp_verify,
    zabreiko_decompose,
)

__all__ = [
    "__version__",
    # errors
    "HyplabError", "InvalidInput", "DimensionMismatch", "ShapeMismatch",
    "ZeroDivisor", "NotStrictlyPositive", "EmptySet", "UnsupportedNorm",
    "NoConvergence", "NotConverged", "NotInRange", "NotSurjective",
    "PreconditionViolated", "HypothesisFailed",
    # scalars
    "Hyperbolic", "DPlus", "Bicomplex", "OrderRel",
    "ZERO", "ONE", "E1", "E2", "UNIT_I", "UNIT_J", "UNIT_K", "ZERO_DIVISOR_TOL",
    "bc_add", "bc_sub", "bc_mul", "bc_scale", "bc_from_cartesian",
    "bc_to_cartesian", "bc_inverse", "knorm", "euclid_norm",
    "hyp_compare", "hyp_leq", "hyp_abs", "dplus_inverse", "hyp_sup", "hyp_inf",
    # modules
    "BCVector", "DNormConfig", "DSeminorm", "SeriesReport",
    "vec_dnorm", "seminorm_eval", "v_alpha_member", "v_alpha_member_closed",
    "series_sum", "abs_summability_check", "geometric_terms",
    # operators
    "BCMatrix", "OperatorNormReport", "SolveReport", "SurjectivityReport",
    "mat_apply", "sigma_extremes", "op_dnorm", "min_norm_solve",
    "open_mapping_delta", "surjectivity_check",
    # theorem checks
    "ContinuityReport", "SubaddReport", "BallScaleReport", "ZabreikoTrace",
    "UBPReport", "OpenMapReport", "check_stream",
    "continuity_bound_check", "countable_subadd_check", "ball_scaling_check",
    "zabreiko_decompose", "ubp_verify", "open_mapping_verify",
]
