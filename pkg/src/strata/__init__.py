"""Geometric gait design for planar no-slip legged systems.

Core objects: SE(2) transforms (se2), multi-leg models and their local
connections (model), the inter-foot distance field with level-set flows
(shapefield), subgaits / two-beat gaits / stratified panels (gait), batch
CLI (cli) and the live steering session service (service).
"""

from .se2 import IDENTITY, SE2Element, SE2Velocity, compose, inverse, integrate_body_velocity
from .model import (
    LegModule,
    LocalConnection,
    ModelSpec,
    foot_jacobian,
    foot_pose,
    fourbar,
    load_model,
    local_connection,
    pfaffian,
    quad,
)
from .shapefield import (
    FieldSample,
    FlowResult,
    ReducedShapeSubspace,
    Singularity,
    SingularShape,
    closed_contour,
    field_sample,
    find_singularities,
    flow,
    grad_f,
    inter_foot_f,
    nonslip_field,
)
from .gait import (
    ControlInputs,
    DisplacementField,
    StanceOverlap,
    StratifiedPanelGrid,
    SubgaitSpec,
    Trajectory,
    TwoBeatGaitSpec,
    TwoBeatPanel,
    compose_two_beat,
    direction_gain_circle,
    displacement_field,
    fiducial_trot,
    reconstruct_body_trajectory,
    stance_endpoints,
    stratified_panel,
    stratified_panel_at,
    subgait_shape_trajectory,
    two_beat_gait,
    two_beat_panel,
    turning_radius,
)

__version__ = "0.1.0"

__all__ = [
    "IDENTITY",
    "SE2Element",
    "SE2Velocity",
    "compose",
    "inverse",
    "integrate_body_velocity",
    "LegModule",
    "LocalConnection",
    "ModelSpec",
    "foot_jacobian",
    "foot_pose",
    "fourbar",
    "load_model",
    "local_connection",
    "pfaffian",
    "quad",
    "FieldSample",
    "FlowResult",
    "ReducedShapeSubspace",
    "Singularity",
    "SingularShape",
    "closed_contour",
    "field_sample",
    "find_singularities",
    "flow",
    "grad_f",
    "inter_foot_f",
    "nonslip_field",
    "ControlInputs",
    "DisplacementField",
    "StanceOverlap",
    "StratifiedPanelGrid",
    "SubgaitSpec",
    "Trajectory",
    "TwoBeatGaitSpec",
    "TwoBeatPanel",
    "compose_two_beat",
    "direction_gain_circle",
    "displacement_field",
    "fiducial_trot",
    "reconstruct_body_trajectory",
    "stance_endpoints",
    "stratified_panel",
    "stratified_panel_at",
    "subgait_shape_trajectory",
    "two_beat_gait",
    "two_beat_panel",
    "turning_radius",
]
