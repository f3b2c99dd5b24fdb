"""Model spaces, points and standard forms."""

from .forms import OneForm, OneFormId, eval_form, standard_form
from .spaces import (
    Point,
    Space,
    SpaceKind,
    TangentVector,
    ambient_distance,
    circle_displacement,
    coordinate_difference,
    distance_array,
    wrap_unit,
)

__all__ = [
    "Space",
    "SpaceKind",
    "Point",
    "TangentVector",
    "ambient_distance",
    "circle_displacement",
    "coordinate_difference",
    "distance_array",
    "wrap_unit",
    "OneForm",
    "OneFormId",
    "eval_form",
    "standard_form",
]
