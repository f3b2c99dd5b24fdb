"""Compactly supported translations and Reeb pushes."""

import logging
from typing import Optional, Sequence, Tuple

import numpy as np

from ..errors import ConstructionError, UsageError
from ..flows.isotopy import Isotopy, Tolerance
from ..flows.maps import IntegratedFlowMap
from ..geometry.spaces import Space, circle_displacement
from ..hamiltonians.families import reeb_box_generator, translation_generator
from ..hamiltonians.fields import contact_vector_field
from ..utils.grids import ball_samples, box_grid

logger = logging.getLogger(__name__)

VERIFY_TOL = 1e-6

Box = Tuple[Sequence[float], Sequence[float]]


def cutoff_translation(
    t: float,
    plateau_radius: float,
    support_radius: float,
    space: Optional[Space] = None,
    tolerance: Optional[Tolerance] = None,
    verify_samples: int = 200,
) -> IntegratedFlowMap:
    """Contactomorphism acting as ``x_1 -> x_1 + t`` on ``B(plateau_radius)``.

    It is the identity outside ``B(support_radius)``.
    """
    if space is None:
        space = Space.euclidean(1)
    H = translation_generator(t, plateau_radius, support_radius, space)
    f = Isotopy(contact_vector_field(H), 1.0, tolerance).time_map()
    f.label = f"T'({t:g})"
    if t == 0 or verify_samples == 0:
        return f
    rng = np.random.default_rng(0)
    m = space.support_dimension
    X = np.zeros((verify_samples, space.dimension))
    X[:, :m] = ball_samples(rng, verify_samples, m, plateau_radius)
    if space.wraps:
        X[:, space.z_index] = rng.uniform(0.0, 1.0, verify_samples)
    expected = X.copy()
    expected[:, 0] += t
    error = _max_error(space, f.apply(X), expected)
    if error >= VERIFY_TOL:
        raise ConstructionError(
            f"cut-off translation by {t} is off by {error:.2e} on its plateau",
            {"error": error},
        )
    return f


def _difference(space: Space, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    diff = a - b
    if space.wraps:
        zi = space.z_index
        diff[:, zi] = circle_displacement(b[:, zi], a[:, zi])
    return diff


def _max_error(space: Space, actual: np.ndarray, expected: np.ndarray) -> float:
    return float(np.max(np.linalg.norm(_difference(space, actual, expected), axis=1)))


def reeb_push(
    t: float,
    box: Box,
    strip_bounds: Tuple[float, float],
    space: Optional[Space] = None,
    tolerance: Optional[Tolerance] = None,
    margin: Optional[float] = None,
    verify_points: int = 5,
) -> IntegratedFlowMap:
    """Contactomorphism acting as ``z -> z + t`` on ``box``.

    The support lies in the strip ``strip_bounds[0] < x_1 < strip_bounds[1]``.

    ``box`` bounds the support coordinates of the points to push. On the
    Euclidean space the plateau also covers the ``z``-interval swept by the
    push; on the prequantized space the cutoff ignores ``z``.
    """
    if space is None:
        space = Space.euclidean(1)
    if not space.is_contact:
        raise UsageError("Reeb pushes need a contact space")
    m = space.support_dimension
    lower = np.asarray(box[0], dtype=float).reshape(-1)
    upper = np.asarray(box[1], dtype=float).reshape(-1)
    if lower.size != m or upper.size != m or np.any(upper < lower):
        raise UsageError(f"Reeb push box needs {m} ordered bounds per side")
    s_lo, s_hi = strip_bounds
    if not s_lo < lower[0] <= upper[0] < s_hi:
        raise UsageError(
            f"box x_1-range [{lower[0]}, {upper[0]}] must lie inside the strip "
            f"({s_lo}, {s_hi})"
        )

    inner_lower = lower.copy()
    inner_upper = upper.copy()
    if not space.wraps:
        zi = space.z_index
        inner_lower[zi] += min(0.0, t)
        inner_upper[zi] += max(0.0, t)
    widths = np.maximum(upper - lower, 1e-3)
    pad = np.full(m, margin) if margin is not None else np.maximum(0.25 * widths, 0.1)
    outer_lower = inner_lower - pad
    outer_upper = inner_upper + pad
    outer_lower[0] = 0.5 * (s_lo + lower[0])
    outer_upper[0] = 0.5 * (upper[0] + s_hi)

    H = reeb_box_generator(t, inner_lower, inner_upper, outer_lower, outer_upper, space)
    f = Isotopy(contact_vector_field(H), 1.0, tolerance).time_map()
    f.label = f"push({t:g})"
    if verify_points > 0:
        X = box_grid(lower, upper, verify_points)
        if space.wraps:
            X = np.hstack([X, np.zeros((X.shape[0], 1))])
        expected = X.copy()
        expected[:, space.z_index] += t
        expected = space.wrap(expected)
        error = _max_error(space, f.apply(X), expected)
        if error >= VERIFY_TOL:
            raise ConstructionError(
                f"Reeb push by {t} is off by {error:.2e} on its box", {"error": error}
            )
    return f
