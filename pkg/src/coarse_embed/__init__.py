"""Embeddings of finite metric spaces into l2-sums of lp blocks.

Construct tent-based embeddings with certified distortion bounds, proper
affine isometric actions of finitely generated groups on the same target
spaces, and expander diagnostics motivating the growing block exponents.
"""
from .cocycle import (
    affine_action,
    bump,
    bump_shift_report,
    cocycle_residual,
    cocycle_vector,
    group_schedule,
    properness_curve,
    tent_block,
    translate_vector,
)
from .embedding import (
    FULL_SERIES_CONSTANT,
    DistortionProfile,
    EmbeddingCertificate,
    certify,
    distortion_profile,
    embed_point,
    pair_distance,
)
from .errors import (
    BallTooLarge,
    CoarseEmbedError,
    DegenerateEmbedding,
    DisconnectedGraph,
    InfeasibleDegree,
    InputFormatError,
    InvalidVertexId,
    MetricViolation,
    NotConverged,
    ScheduleMismatch,
)
from .expander import poincare_ratio, random_regular, top_two_eigenvalues
from .groups import (
    DEFAULT_BALL_CAP,
    CayleyBall,
    DihedralGroup,
    FreeGroup,
    GroupModel,
    IntegerLattice,
    SymmetricGroup,
    group_from_spec,
    word_ball,
)
from .kernels import active_backend
from .metric import (
    FiniteMetricSpace,
    GrowthProfile,
    from_distance_matrix,
    from_edge_list,
    load_distance_csv,
    load_edge_list,
)
from .mixed_norm import MixedNormVector, lp_norm, zero_vector
from .schedule import ExponentSchedule, lp_upper_bound, schedule_for_space, select_exponent
from .tents import SparseFunction, sup_distance, tent, tent_conditions_report

__version__ = "0.1.0"
