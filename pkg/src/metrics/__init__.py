"""Sampled C^0 distances and the projection pseudo-norm."""

from .c0 import (
    SampleRegion,
    SupEstimate,
    c0_distance,
    c0_norm,
    displacement_estimates,
    projection_distance,
    sampled_distance,
)

__all__ = [
    "SampleRegion",
    "SupEstimate",
    "c0_distance",
    "c0_norm",
    "displacement_estimates",
    "projection_distance",
    "sampled_distance",
]
