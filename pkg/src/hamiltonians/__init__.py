"""Scalar fields, contact/symplectic vector fields, cutoffs and named families."""

from .cutoffs import (
    MAX_STEP_SLOPE,
    box_cutoff,
    bump,
    plateau_1d,
    radial_field,
    slope_ratio,
    smooth_step,
)
from .families import (
    FAMILIES,
    hessian_bound,
    named_hamiltonian,
    radial_profile,
    random_contact_hamiltonian,
    random_hamiltonian,
    reeb_box_generator,
    rotation_plateau,
    scaling_generator,
    translation_generator,
)
from .fields import (
    ScalarField,
    VectorField,
    circle_mode,
    constant,
    contact_vector_field,
    coordinate,
    reeb_field,
    symplectic_vector_field,
)

__all__ = [
    "ScalarField",
    "VectorField",
    "constant",
    "coordinate",
    "circle_mode",
    "contact_vector_field",
    "symplectic_vector_field",
    "reeb_field",
    "MAX_STEP_SLOPE",
    "smooth_step",
    "bump",
    "plateau_1d",
    "box_cutoff",
    "radial_field",
    "slope_ratio",
    "FAMILIES",
    "named_hamiltonian",
    "radial_profile",
    "rotation_plateau",
    "translation_generator",
    "scaling_generator",
    "reeb_box_generator",
    "random_hamiltonian",
    "random_contact_hamiltonian",
    "hessian_bound",
]
