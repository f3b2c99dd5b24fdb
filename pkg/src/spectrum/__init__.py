"""Translated points, action spectra and the root search behind them."""

from .action_spectrum import ActionSpectrum, cluster_actions, cluster_values
from .newton import NewtonResult, RootSearch, damped_newton, search_roots
from .translated_points import (
    TranslatedPoint,
    consistent_witnesses,
    find_translated_points,
    resolve_region,
    spectrum,
    translation_residual,
)

__all__ = [
    "ActionSpectrum",
    "cluster_actions",
    "cluster_values",
    "NewtonResult",
    "RootSearch",
    "damped_newton",
    "search_roots",
    "TranslatedPoint",
    "consistent_witnesses",
    "find_translated_points",
    "resolve_region",
    "spectrum",
    "translation_residual",
]
