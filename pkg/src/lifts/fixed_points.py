"""Fixed points of base Hamiltonian maps and their action spectrum."""

import logging
import math
from typing import Optional

import numpy as np

from ..config import get_settings
from ..spectrum.action_spectrum import ActionSpectrum, cluster_actions
from ..spectrum.newton import search_roots
from ..spectrum.translated_points import SearchRegion, resolve_region
from ..utils.grids import box_grid, fit_points_per_axis
from .hamiltonian_flow import BaseMap, as_base_map

logger = logging.getLogger(__name__)


def find_fixed_points(
    flow: BaseMap,
    search_region: Optional[SearchRegion] = None,
    points_per_axis: Optional[int] = None,
    tol: Optional[float] = None,
    refine_threshold: Optional[float] = None,
    inflate: Optional[float] = None,
) -> np.ndarray:
    """Fixed points found from a grid plus Newton refinement.

    The grid contains the origin when the box is centred. Fixed points
    outside the support are collapsed to one representative.
    """
    base = as_base_map(flow)
    settings = get_settings()
    ppa = points_per_axis or settings.fixed_point_grid
    if ppa % 2 == 0:
        ppa += 1
    tol = settings.fixed_point_tol if tol is None else tol
    inflate = 0.0 if inflate is None else inflate
    lower, upper = resolve_region(base, search_region, inflate)
    count = fit_points_per_axis(ppa, lower.size, settings.max_grid_points)
    seeds = box_grid(lower, upper, count)
    spacing = float(np.max((upper - lower) / (count - 1)))
    threshold = spacing if refine_threshold is None else refine_threshold

    search = search_roots(lambda Q: base.apply(Q) - Q, seeds, tol, threshold)
    logger.info(
        f"Fixed points of {base.label}: {search.n_seeds} seeds, "
        f"{search.n_accepted} accepted, {search.n_refined} refined, "
        f"{search.n_diverged} diverged"
    )
    roots = search.roots
    if math.isfinite(base.support_radius):
        outside = np.linalg.norm(roots, axis=1) > base.support_radius
        keep = ~outside
        if np.any(outside):
            keep[np.flatnonzero(outside)[0]] = True
            roots = roots[keep]
        else:
            d = roots.shape[1] if roots.size else base.space.dimension
            extra = np.zeros((1, d))
            extra[0, 0] = 1.1 * base.support_radius + 0.1
            roots = np.vstack([roots.reshape(-1, extra.shape[1]), extra])
    return roots


def base_spectrum(
    flow: BaseMap,
    search_region: Optional[SearchRegion] = None,
    cluster_tol: Optional[float] = None,
    **search_options,
) -> ActionSpectrum:
    """Point actions at the fixed points of a base Hamiltonian map, clustered.

    For a lift these are exactly the actions of its translated points, so
    this is the oracle the translated-point search is checked against.
    """
    base = as_base_map(flow)
    roots = find_fixed_points(base, search_region, **search_options)
    actions = base.transport(roots).travel if roots.shape[0] else np.zeros(0)
    return cluster_actions(actions, roots, cluster_tol)
