"""Semi-invariants of quivers without oriented cycles, computed exactly.

Determinantal semi-invariants, randomized semistability and null-cone tests,
extremal-ray weights, closed-form degree bounds and the Q_n lower-bound family.
"""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .quiver import (
    Arrow,
    DimVector,
    Path,
    Quiver,
    Weight,
    enumerate_paths,
    path_counts,
    sigma_norm,
    validate_quiver,
    vector_norms,
    weight_apply,
    weight_decompose,
)
from .linalg import RationalMatrix, det, minor_kernel, primitive, rank
from .schofield import (
    InstantiatedPencil,
    LinearMatrix,
    Representation,
    build_linear_matrix,
    det_scaling_exponents,
    evaluate_det,
    instantiate,
)
from .stability import (
    Certificate,
    Decision,
    RayWeightResult,
    Verdict,
    cone_contains,
    is_semistable,
    null_cone_membership,
    ray_weight,
    replay_certificate,
    weight_bound_check,
)
from .bounds import (
    BoundsReport,
    beta_from_gamma,
    bounds_report,
    matrix_si_bounds,
    polarize,
    subring_degree_bound,
)
from .families import build_qn, build_R, kronecker_quiver, kronecker_V, kronecker_W, verify_qn
