"""Lorentzian geometry of the anti-de Sitter plane.

Closed-form extremals, the exponential map and its inverse, the distance
function from the origin with its optimal synthesis, and the Killing
algebra used to move distance questions to the origin.
"""

from ._backend import BACKEND
from .errors import DomainError, NoOptimalTrajectory, NonFiniteState
from .expmap import EPS_BD, ExpCoords, ReachabilityClass, Region, Side, classify, exp_map, log_map
from .extremals import (
    AdjointCovector,
    ExtremalClass,
    ExtremalState,
    MaximalityCase,
    abnormal_extremal,
    adjoint_covector,
    first_integral,
    hamiltonian_rhs,
    maximality_case,
    normal_extremal,
)
from .geometry import (
    EPS_CONE,
    AmbientPoint,
    CausalClass,
    Control,
    Point,
    TangentVector,
    causal_class,
    embed,
    frame,
    gd,
    metric_eval,
)
from .killing import (
    IsometryRoute,
    KillingField,
    killing_eval,
    killing_flow,
    killing_residual,
    lie_bracket,
    route_to_origin,
    stream_samples,
    transport_distance,
)
from .synthesis import (
    DistanceResult,
    Trajectory,
    bypass_curve,
    bypass_curve_length,
    lorentz_distance_from_origin,
    psi_for_target,
    reachable_from,
    synthesis_trajectory,
    time_for_target,
    upper_boundary_distance_sequence,
)

__version__ = "0.1.0"
