"""Sobolev gradient flow of length on closed planar curves.

The velocity field is minus the curve plus a periodic Green's-function
convolution of the curve against its own arc-length measure, which makes
the flow the steepest descent of length in the H1(ds) geometry. The
library provides the discrete kernel, the flow integrators, an exact
circle solution through the Lambert W function, diagnostics, and
path-length computations in the space of curves.
"""

from .curves import (
    ArcData,
    ChordArcResult,
    FieldNorms,
    FrameData,
    PolyCurve,
    arc_data,
    chord_arc_min,
    curve_to_json,
    edge_lengths,
    edge_vectors,
    frame_data,
    norms,
    read_curve,
    reindex,
    signed_area,
    sup_norm,
    total_length,
    turning_angles,
    write_curve,
)
from .diagnostics import (
    CSV_COLUMNS,
    DiagnosticsRecord,
    EmbeddednessCheck,
    MonotonicityReport,
    MonitorVerdict,
    embeddedness_condition,
    monotonicity_report,
    record,
)
from .errors import (
    ConstantMapGuard,
    DegenerateCurve,
    MismatchedFrames,
    NonMonotoneTwist,
    OutOfDomain,
)
from .flow import (
    FlowConfig,
    Termination,
    Trajectory,
    asymptotic_profile,
    run_flow,
    step_euler,
    step_rk4,
    trajectory_h1ds_length,
)
from .gradient import (
    VelocityField,
    flow_velocity,
    flow_velocity_centered,
    h1ds_inner,
    l2ds_inner,
    length_directional_derivative,
)
from .kernel import (
    MIN_KERNEL_LENGTH,
    KernelMatrix,
    convolve_kernel,
    greens_value,
    kernel_matrix,
    row_quadrature_defect,
)
from .lambertw import CircleSolution, circle_radius, lambert_w0, lambert_w0_of_exp
from .output import (
    read_diagnostics_csv,
    trajectory_to_json,
    write_diagnostics_csv,
    write_svg,
    write_trajectory_json,
)
from .paths import (
    CurvePath,
    as_mode,
    path_from_json,
    path_length_l2ds,
    path_to_json,
    reparam_path,
    shrink_path,
    zigzag_path,
)
from .shapes import GeneratorSpec, barbell, circle, ellipse, generate, square, star

__all__ = [
    "ArcData",
    "ChordArcResult",
    "CircleSolution",
    "ConstantMapGuard",
    "CSV_COLUMNS",
    "CurvePath",
    "DegenerateCurve",
    "DiagnosticsRecord",
    "EmbeddednessCheck",
    "FieldNorms",
    "FlowConfig",
    "FrameData",
    "GeneratorSpec",
    "KernelMatrix",
    "MIN_KERNEL_LENGTH",
    "MismatchedFrames",
    "MonitorVerdict",
    "MonotonicityReport",
    "NonMonotoneTwist",
    "OutOfDomain",
    "PolyCurve",
    "Termination",
    "Trajectory",
    "VelocityField",
    "arc_data",
    "as_mode",
    "asymptotic_profile",
    "barbell",
    "chord_arc_min",
    "circle",
    "circle_radius",
    "convolve_kernel",
    "curve_to_json",
    "edge_lengths",
    "edge_vectors",
    "ellipse",
    "embeddedness_condition",
    "flow_velocity",
    "flow_velocity_centered",
    "frame_data",
    "generate",
    "greens_value",
    "h1ds_inner",
    "kernel_matrix",
    "l2ds_inner",
    "lambert_w0",
    "lambert_w0_of_exp",
    "length_directional_derivative",
    "monotonicity_report",
    "norms",
    "path_from_json",
    "path_length_l2ds",
    "path_to_json",
    "read_curve",
    "read_diagnostics_csv",
    "record",
    "reindex",
    "reparam_path",
    "row_quadrature_defect",
    "run_flow",
    "shrink_path",
    "signed_area",
    "square",
    "star",
    "step_euler",
    "step_rk4",
    "sup_norm",
    "total_length",
    "trajectory_h1ds_length",
    "trajectory_to_json",
    "turning_angles",
    "write_curve",
    "write_diagnostics_csv",
    "write_svg",
    "write_trajectory_json",
    "zigzag_path",
]
