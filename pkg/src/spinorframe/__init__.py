"""Spinor representation and transport of Frenet and Darboux frames."""

from .catalog import (
    Curve,
    CurveSpec,
    Surface,
    SurfaceSpec,
    arc_length_reparameterize,
    make_curve,
    make_surface,
    numeric_derivative,
    parametric_curve,
)
from .config import ScenarioConfig, parse_config
from .errors import *  # noqa: F401,F403
from .evolution import (
    DarbouxSignal,
    FrenetSignal,
    Trajectory,
    darboux_spinor_rhs,
    darboux_spinor_system,
    darboux_vector_rhs,
    darboux_vector_system,
    frenet_spinor_rhs,
    frenet_spinor_system,
    frenet_vector_rhs,
    frenet_vector_system,
    rk4_integrate,
)
from .geometry import (
    DarbouxApparatus,
    FrenetApparatus,
    darboux_apparatus,
    frame_phase,
    frenet_apparatus,
    rotate_frenet_to_darboux,
)
from .spinor import Spinor, Triad, mate, norm_sq, sigma_bilinear, spinor_from_triad, triad_from_spinor
from .verification import (
    ComparisonReport,
    compare_run,
    frame_distance,
    run_scenario,
    spinor_lift,
    theorem2_residual,
)

__version__ = "0.1.0"
