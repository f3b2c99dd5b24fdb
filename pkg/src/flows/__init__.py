"""Flow engine: integration, maps, composition and contact checks."""

from .isotopy import Isotopy, Tolerance, Trajectory, integrate
from .maps import (
    Composite,
    ExplicitMap,
    FlowMap,
    IntegratedFlowMap,
    MapResult,
    compose,
    conjugate,
    identity_map,
    image_support_bound,
    translation_map,
)
from .pullback import (
    PullbackDefect,
    jacobians,
    path_action,
    path_action_along,
    pullback_defect,
    pullback_defects,
)

__all__ = [
    "Isotopy",
    "Tolerance",
    "Trajectory",
    "integrate",
    "FlowMap",
    "MapResult",
    "IntegratedFlowMap",
    "ExplicitMap",
    "Composite",
    "compose",
    "conjugate",
    "identity_map",
    "translation_map",
    "image_support_bound",
    "PullbackDefect",
    "jacobians",
    "pullback_defect",
    "pullback_defects",
    "path_action",
    "path_action_along",
]
