"""Translated points of contactomorphisms of ``R^{2n} x S^1`` and their action spectra.

A point ``z`` is translated when ``phi(z)`` lies on the Reeb orbit of ``z``
and the conformal factor of ``phi`` at ``z`` is one. The search seeds a
tensor grid over the base box times a circle grid, accepts seeds whose
residual is already below tolerance and refines the promising ones by
damped Newton.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..config import get_settings
from ..errors import UsageError
from ..flows.maps import FlowMap
from ..geometry.spaces import Point, SpaceKind, circle_displacement, distance_array
from ..utils.grids import box_grid, circle_grid, fit_points_per_axis, with_circle
from .action_spectrum import ActionSpectrum, cluster_actions
from .newton import search_roots

logger = logging.getLogger(__name__)

SearchRegion = Tuple[Sequence[float], Sequence[float]]

# Allowed mismatch between the integrated action and the circle displacement, modulo 1.
CONSISTENCY_TOL = 1e-5


@dataclass(frozen=True)
class TranslatedPoint:
    point: Point
    tau: float
    action: float
    residual_translation: float
    residual_conformal: float

    @property
    def consistent(self) -> bool:
        gap = self.action - self.tau
        return abs(gap - round(gap)) < CONSISTENCY_TOL



def consistent_witnesses(points: Sequence[TranslatedPoint]) -> List[TranslatedPoint]:
    """Drop witnesses whose action and circle shift disagree modulo 1."""
    kept: List[TranslatedPoint] = []
    for tp in points:
        if tp.consistent:
            kept.append(tp)
        else:
            logger.warning(
                f"Dropping witness at {tp.point.coords}: action {tp.action:.9f} "
                f"and circle shift {tp.tau:.9f} disagree modulo 1"
            )
    return kept


def resolve_region(
    phi: FlowMap, search_region: Optional[SearchRegion], inflate: float
) -> Tuple[np.ndarray, np.ndarray]:
    """Search box over the base coordinates.

    Defaults to the support box inflated by ``inflate``.
    """
    m = phi.space.support_dimension
    if search_region is None:
        if not math.isfinite(phi.support_radius):
            raise UsageError(
                f"{phi.label} has no finite support bound; "
                "pass an explicit search region"
            )
        radius = max(phi.support_radius, 1e-3) * (1.0 + inflate)
        return -radius * np.ones(m), radius * np.ones(m)
    lower = np.asarray(search_region[0], dtype=float).reshape(-1)
    upper = np.asarray(search_region[1], dtype=float).reshape(-1)
    if lower.size != m or upper.size != m:
        raise UsageError(f"search region needs {m} bounds per side on {phi.space}")
    center = 0.5 * (lower + upper)
    half = 0.5 * (upper - lower) * (1.0 + inflate)
    return center - half, center + half


def translation_residual(phi: FlowMap, coords: np.ndarray) -> np.ndarray:
    """Rows ``(base(phi(z)) - base(z), e^{g(z)} - 1)``."""
    m = phi.space.support_dimension
    step = phi.transport(coords)
    R = np.empty((coords.shape[0], m + 1))
    R[:, :m] = step.image[:, :m] - coords[:, :m]
    R[:, m] = np.expm1(step.log_conformal)
    return R


def _outside_representative(phi: FlowMap) -> Optional[np.ndarray]:
    if not math.isfinite(phi.support_radius):
        return None
    z = np.zeros((1, phi.space.dimension))
    z[0, 0] = 1.1 * phi.support_radius + 0.1
    return z


def find_translated_points(
    phi: FlowMap,
    search_region: Optional[SearchRegion] = None,
    points_per_axis: Optional[int] = None,
    circle_points: Optional[int] = None,
    tol: Optional[float] = None,
    refine_threshold: Optional[float] = None,
    inflate: Optional[float] = None,
) -> List[TranslatedPoint]:
    """Enumerate translated points of ``phi`` inside the (inflated) search region.

    Completeness is heuristic. Translated points outside the support of
    ``phi`` form a continuum with action zero and are represented by a
    single witness.
    """
    space = phi.space
    space.require(SpaceKind.PREQUANTIZED)
    settings = get_settings()
    ppa = points_per_axis or settings.translated_point_grid
    k = circle_points or settings.circle_grid
    tol = settings.translated_point_tol if tol is None else tol
    inflate = settings.search_inflation if inflate is None else inflate
    lower, upper = resolve_region(phi, search_region, inflate)

    count = fit_points_per_axis(ppa, lower.size, max(settings.max_grid_points // k, 1))
    seeds = with_circle(box_grid(lower, upper, count), circle_grid(k))
    spacing = float(np.max((upper - lower) / (count - 1)))
    threshold = spacing if refine_threshold is None else refine_threshold

    search = search_roots(
        lambda Z: translation_residual(phi, Z),
        seeds,
        tol,
        threshold,
        wrap=space.wrap,
    )
    logger.info(
        f"Translated points of {phi.label}: {search.n_seeds} seeds, "
        f"{search.n_accepted} accepted, {search.n_refined} refined, "
        f"{search.n_diverged} diverged"
    )
    roots = space.wrap(search.roots)
    outside = space.support_norm(roots) > phi.support_radius
    keep = ~outside
    if np.any(outside):
        keep[np.flatnonzero(outside)[0]] = True
        roots = roots[keep]
    else:
        extra = _outside_representative(phi)
        if extra is not None:
            roots = np.vstack([roots, extra])
    return _describe(phi, roots, tol)


def _describe(phi: FlowMap, roots: np.ndarray, tol: float) -> List[TranslatedPoint]:
    space = phi.space
    if roots.shape[0] == 0:
        return []
    step = phi.transport(roots)
    zi = space.z_index
    tau = circle_displacement(roots[:, zi], step.image[:, zi])
    shifted = step.image.copy()
    shifted[:, zi] = shifted[:, zi] - tau
    translation = distance_array(space, space.wrap(shifted), roots)
    conformal = np.abs(np.expm1(step.log_conformal))
    points: List[TranslatedPoint] = []
    rows = zip(roots, np.atleast_1d(tau), step.travel, translation, conformal)
    for row, t, a, rt, rc in rows:
        if rt >= 10 * tol or rc >= 10 * tol:
            continue
        points.append(
            TranslatedPoint(Point(space, row), float(t), float(a), float(rt), float(rc))
        )
    return consistent_witnesses(points)


def spectrum(
    phi: FlowMap,
    search_region: Optional[SearchRegion] = None,
    cluster_tol: Optional[float] = None,
    **search_options,
) -> ActionSpectrum:
    """Action values of the translated points of ``phi``, clustered."""
    witnesses = find_translated_points(phi, search_region, **search_options)
    actions = [w.action for w in witnesses]
    coords = np.array([w.point.coords for w in witnesses]) if witnesses else None
    return cluster_actions(actions, coords, cluster_tol)
