"""Sample grids and random sample sets."""

import logging
import math
from typing import Optional, Sequence

import numpy as np

from ..errors import UsageError

logger = logging.getLogger(__name__)


def fit_points_per_axis(
    points_per_axis: int, dims: int, max_points: Optional[int]
) -> int:
    """Largest count ``<= points_per_axis`` with ``count**dims <= max_points``.

    Odd when possible, so centred grids keep the origin.
    """
    if max_points is None or points_per_axis ** dims <= max_points:
        return points_per_axis
    fitted = max(2, int(math.floor(max_points ** (1.0 / dims))))
    if fitted % 2 == 0 and fitted > 2:
        fitted -= 1
    logger.info(
        f"Reducing grid from {points_per_axis} to {fitted} points per axis "
        f"in dimension {dims}"
    )
    return fitted


def box_grid(
    lower: Sequence[float],
    upper: Sequence[float],
    points_per_axis: int,
    max_points: Optional[int] = None,
) -> np.ndarray:
    """Tensor grid including both faces of the box, shape ``(count**m, m)``."""
    lower = np.asarray(lower, dtype=float).reshape(-1)
    upper = np.asarray(upper, dtype=float).reshape(-1)
    if lower.shape != upper.shape or np.any(upper < lower):
        raise UsageError("box grid needs matching bounds with lower <= upper")
    count = fit_points_per_axis(points_per_axis, lower.size, max_points)
    axes = [np.linspace(lo, hi, count) for lo, hi in zip(lower, upper)]
    return np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, lower.size)


def circle_grid(count: int, offset: float = 0.0) -> np.ndarray:
    """``count`` equally spaced points of ``R/Z`` starting at ``offset``."""
    if count < 1:
        raise UsageError("circle grid needs at least one point")
    return np.mod(offset + np.arange(count) / count, 1.0)


def with_circle(base: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """Product of base points and circle values: rows ``(q, theta)``."""
    base = np.atleast_2d(base)
    q = np.repeat(base, len(thetas), axis=0)
    z = np.tile(np.asarray(thetas, dtype=float), base.shape[0])
    return np.hstack([q, z[:, None]])


def ball_samples(
    rng: np.random.Generator,
    count: int,
    dim: int,
    radius: float,
    center: Optional[Sequence[float]] = None,
    inner_radius: float = 0.0,
) -> np.ndarray:
    """Uniform samples of the shell ``inner_radius <= |x - c| <= radius``."""
    if radius <= 0 or not 0 <= inner_radius < radius:
        raise UsageError("ball samples need 0 <= inner_radius < radius")
    directions = rng.normal(size=(count, dim))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    u = rng.uniform((inner_radius / radius) ** dim, 1.0, size=count)
    radii = radius * u ** (1.0 / dim)
    out = directions * radii[:, None]
    if center is not None:
        out += np.asarray(center, dtype=float)
    return out
