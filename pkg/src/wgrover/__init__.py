"""Grover amplitude amplification over weighted databases.

Simulates the exact discrete evolution, its damped-oscillation continuum
approximation, and the classical-vs-Grover step-count comparison for
databases whose elements carry unequal proportions.
"""

from .amplitudes import (
    AmplitudeDistribution,
    WeightedDatabase,
    coherent_normalization,
    from_weights,
    load_spec,
    proportion,
    truncated_coherent,
    uniform,
    weights_from_list,
)
from .analysis import (
    ComparisonRow,
    SpeedupVerdict,
    classical_bounds,
    comparison_table,
    global_speedup,
    local_failures,
    local_speedup,
)
from .continuum import (
    ContinuumSolution,
    DiscriminantClass,
    classify,
    delta_tilde,
    eval_fa,
    eval_fb,
    fit_one_step_solution,
    fit_solution,
    period,
    predicted_peak_step,
)
from .errors import ConsistencyError, DomainError, LabelNotFoundError, NoPeakError
from .grover_core import (
    Trajectory,
    TrajectoryPoint,
    TwoDState,
    dense_apply_G,
    estimated_peak,
    first_peak,
    iterate,
    project_onto_subspace,
    scan_first_peak,
    step,
    success_probability,
)

__all__ = [
    "AmplitudeDistribution",
    "WeightedDatabase",
    "ComparisonRow",
    "SpeedupVerdict",
    "ContinuumSolution",
    "DiscriminantClass",
    "Trajectory",
    "TrajectoryPoint",
    "TwoDState",
    "DomainError",
    "LabelNotFoundError",
    "NoPeakError",
    "ConsistencyError",
    "uniform",
    "truncated_coherent",
    "coherent_normalization",
    "from_weights",
    "weights_from_list",
    "proportion",
    "load_spec",
    "step",
    "iterate",
    "success_probability",
    "first_peak",
    "scan_first_peak",
    "estimated_peak",
    "dense_apply_G",
    "project_onto_subspace",
    "delta_tilde",
    "classify",
    "fit_solution",
    "fit_one_step_solution",
    "eval_fa",
    "eval_fb",
    "period",
    "predicted_peak_step",
    "classical_bounds",
    "local_speedup",
    "local_failures",
    "global_speedup",
    "comparison_table",
]

__version__ = "0.1.0"
