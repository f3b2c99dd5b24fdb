"""Squeezes, translations, Reeb pushes, the basis change and Rokhlin elements."""

from .basis_change import basis_change, basis_change_map
from .rokhlin import (
    FAMILIES as ROKHLIN_FAMILIES,
    RokhlinElement,
    RokhlinExtraction,
    family_maps,
    fragment_center,
    fragment_radius,
    fragment_strip,
    rokhlin_element,
    rokhlin_extract,
)
from .squeeze import SqueezeMap, scaling, squeeze
from .translations import cutoff_translation, reeb_push

__all__ = [
    "squeeze",
    "scaling",
    "SqueezeMap",
    "cutoff_translation",
    "reeb_push",
    "basis_change",
    "basis_change_map",
    "RokhlinElement",
    "RokhlinExtraction",
    "rokhlin_element",
    "rokhlin_extract",
    "fragment_center",
    "fragment_radius",
    "fragment_strip",
    "family_maps",
    "ROKHLIN_FAMILIES",
]
