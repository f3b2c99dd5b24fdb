"""Finite-difference checks of the contact condition and path actions."""

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from ..config import get_settings
from ..errors import UsageError
from ..geometry.forms import OneForm
from ..geometry.spaces import Point, circle_displacement, coordinate_difference
from .isotopy import Isotopy
from .maps import FlowMap

logger = logging.getLogger(__name__)


@dataclass
class PullbackDefect:
    """Best conformal factor and residual of ``f^* form`` against ``reference``."""

    conformal: float
    residual: float
    flagged: bool

    @property
    def log_conformal(self) -> float:
        return float(np.log(self.conformal)) if self.conformal > 0 else float("nan")


def jacobians(
    f: FlowMap, coords: np.ndarray, step: Optional[float] = None
) -> np.ndarray:
    """Central-difference Jacobians ``(N, d, d)`` of ``f``, circle-aware."""
    space = f.space
    X = space.check_coords(coords)
    N, d = X.shape
    rel = get_settings().pullback_step if step is None else step
    h = rel * (1.0 + np.linalg.norm(space.support_coords(X), axis=1))
    stencil = np.empty((2 * d, N, d))
    for k in range(d):
        stencil[2 * k] = X
        stencil[2 * k + 1] = X
        stencil[2 * k, :, k] += h
        stencil[2 * k + 1, :, k] -= h
    images = f.apply(stencil.reshape(-1, d)).reshape(2 * d, N, d)
    J = np.empty((N, d, d))
    for k in range(d):
        delta = coordinate_difference(space, images[2 * k + 1], images[2 * k])
        J[:, :, k] = delta / (2.0 * h[:, None])
    return J


def pullback_defects(
    f: FlowMap,
    form: OneForm,
    coords: np.ndarray,
    reference: Optional[OneForm] = None,
    step: Optional[float] = None,
) -> Sequence[PullbackDefect]:
    """Batched :func:`pullback_defect` over the rows of ``coords``."""
    reference = reference or form
    if form.space != f.space or reference.space != f.space:
        raise UsageError(f"forms must live on {f.space}")
    X = f.space.check_coords(coords)
    J = jacobians(f, X, step)
    image = f.apply(X)
    pulled = np.einsum("nd,ndk->nk", form.coefficients(image), J)
    ref = reference.coefficients(X)
    conformal = np.sum(pulled * ref, axis=1) / np.sum(ref * ref, axis=1)
    residual = np.linalg.norm(pulled - conformal[:, None] * ref, axis=1)
    flagged = ~(conformal > 0) | ~np.isfinite(residual)
    if np.any(flagged):
        logger.warning(
            f"{int(np.sum(flagged))} of {len(X)} points have a non-positive "
            f"conformal factor under {f.label}"
        )
    return [
        PullbackDefect(float(c), float(r), bool(fl))
        for c, r, fl in zip(conformal, residual, flagged)
    ]


def pullback_defect(
    f: FlowMap,
    form: OneForm,
    p: Point,
    reference: Optional[OneForm] = None,
    step: Optional[float] = None,
) -> PullbackDefect:
    """Compare ``f^* form`` with ``reference`` (default ``form``) at ``p``.

    The differential is taken by central differences with step
    ``h = 1e-5 (1 + |p|)``; the conformal factor is the least-squares
    multiplier and the residual the norm of what is left over.
    """
    if p.space != f.space:
        raise UsageError(f"{f.label} acts on {f.space}, point lives in {p.space}")
    return pullback_defects(f, form, p.coords.reshape(1, -1), reference, step)[0]


def path_action(isotopy: Isotopy, z: Point) -> float:
    """Unwrapped circle travel of ``t -> phi_t(z)`` over ``[0, T]``."""
    if not isotopy.space.wraps:
        raise UsageError(
            f"path actions are defined on the prequantized space, got {isotopy.space}"
        )
    if z.space != isotopy.space:
        raise UsageError(f"isotopy acts on {isotopy.space}, point lives in {z.space}")
    return float(isotopy.time_map().transport(z.coords).travel[0])


def path_action_along(
    path: Callable[[float], np.ndarray], times: Sequence[float]
) -> np.ndarray:
    """Travel along a sampled path ``t -> path(t)`` by summing circle steps.

    ``path(t)`` returns one row per point.

    Consecutive samples must move the circle coordinate by less than one half.
    """
    times = list(times)
    if len(times) < 2:
        raise UsageError("a sampled path needs at least two times")
    previous = np.asarray(path(times[0]), dtype=float)
    travel = np.zeros(previous.shape[0])
    for t in times[1:]:
        current = np.asarray(path(t), dtype=float)
        step = circle_displacement(previous[:, -1], current[:, -1])
        if np.any(np.abs(step) > 0.45):
            logger.warning(
                f"path sample at t={t:.4g} moves the circle coordinate "
                f"by {np.max(np.abs(step)):.3f}"
            )
        travel += step
        previous = current
    return travel
