"""Hamiltonian flows on the base, point actions, lifts and base action spectra."""

from .fixed_points import base_spectrum, find_fixed_points
from .hamiltonian_flow import (
    HamiltonianFlow,
    as_base_map,
    base_translation,
    hamiltonian_composite,
    point_action,
    point_actions,
)
from .lift import LiftMap, contact_lift_route, lift, lifted_hamiltonian

__all__ = [
    "HamiltonianFlow",
    "as_base_map",
    "base_translation",
    "hamiltonian_composite",
    "point_action",
    "point_actions",
    "LiftMap",
    "lift",
    "lifted_hamiltonian",
    "contact_lift_route",
    "find_fixed_points",
    "base_spectrum",
]
