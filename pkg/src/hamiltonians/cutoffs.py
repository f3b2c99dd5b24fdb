"""Smooth step, radial bump and box cutoff functions."""

from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from ..errors import UsageError
from ..geometry.spaces import Space
from .fields import ScalarField

# exp(-1/s) underflows to 0.0 below this.
_TINY = 1.0 / 700.0

Profile = Callable[[np.ndarray], Tuple[np.ndarray, np.ndarray]]


def _psi(s: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """``exp(-1/s)`` for ``s > 0`` (zero otherwise) and its derivative."""
    value = np.zeros_like(s)
    deriv = np.zeros_like(s)
    pos = s > _TINY
    sp = s[pos]
    e = np.exp(-1.0 / sp)
    value[pos] = e
    deriv[pos] = e / (sp * sp)
    return value, deriv


def smooth_step(s) -> Tuple[np.ndarray, np.ndarray]:
    """C-infinity step, 0 for ``s <= 0`` and 1 for ``s >= 1``.

    Returns value and derivative.
    """
    s = np.asarray(s, dtype=float)
    a, da = _psi(s)
    b, db = _psi(1.0 - s)
    denom = a + b
    value = a / denom
    deriv = (da * b + a * db) / (denom * denom)
    return value, deriv


_SLOPE_GRID = np.linspace(0.0, 1.0, 20001)
MAX_STEP_SLOPE = float(np.max(smooth_step(_SLOPE_GRID)[1]))


def _center(space: Space, center: Optional[Sequence[float]]) -> np.ndarray:
    m = space.support_dimension
    if center is None:
        return np.zeros(m)
    c = np.asarray(center, dtype=float).reshape(-1)
    if c.shape[0] != m:
        raise UsageError(
            f"center must have {m} components on {space}, got {c.shape[0]}"
        )
    return c


def radial_field(
    space: Space,
    profile: Profile,
    support_radius: float,
    center: Optional[Sequence[float]] = None,
    label: str = "F(r)",
) -> ScalarField:
    """``F(|q - c|)`` in the support coordinates, from a profile ``r -> (F, F'(r)/r)``.

    The profile returns ``F'(r)/r`` rather than ``F'(r)`` so the gradient is
    regular at the centre.
    """
    c = _center(space, center)
    m = space.support_dimension

    def value_fn(t, X):
        r = np.linalg.norm(X[:, :m] - c, axis=1)
        return profile(r)[0]

    def gradient_fn(t, X):
        q = X[:, :m] - c
        r = np.linalg.norm(q, axis=1)
        g = np.zeros_like(X)
        g[:, :m] = profile(r)[1][:, None] * q
        return g

    return ScalarField(
        space=space,
        value_fn=value_fn,
        gradient_fn=gradient_fn,
        support_radius=float(support_radius + np.linalg.norm(c)),
        label=label,
    )


def bump(
    r_inner: float,
    r_outer: float,
    space: Optional[Space] = None,
    center: Optional[Sequence[float]] = None,
) -> ScalarField:
    """Radial cutoff: 1 on ``B(r_inner)``, 0 outside ``B(r_outer)``."""
    if space is None:
        space = Space.euclidean(1)
    if not 0 < r_inner < r_outer:
        raise UsageError(f"bump needs 0 < r_inner < r_outer, got {r_inner}, {r_outer}")
    width = r_outer - r_inner

    def profile(r):
        step, dstep = smooth_step((r_outer - r) / width)
        with np.errstate(divide="ignore", invalid="ignore"):
            slope = np.where(r > 0, -dstep / (width * np.where(r > 0, r, 1.0)), 0.0)
        return step, slope

    label = f"bump({r_inner:g},{r_outer:g})"
    return radial_field(space, profile, r_outer, center, label=label)


def plateau_1d(
    values: np.ndarray, inner: Tuple[float, float], outer: Tuple[float, float]
) -> Tuple[np.ndarray, np.ndarray]:
    """One-dimensional plateau, 1 on ``inner`` and 0 outside ``outer``.

    Returns value and derivative.
    """
    lo, hi = inner
    olo, ohi = outer
    up, dup = smooth_step((values - olo) / (lo - olo))
    down, ddown = smooth_step((ohi - values) / (ohi - hi))
    value = up * down
    deriv = dup / (lo - olo) * down - up * ddown / (ohi - hi)
    return value, deriv


def box_cutoff(
    space: Space,
    inner_lower: Sequence[float],
    inner_upper: Sequence[float],
    outer_lower: Sequence[float],
    outer_upper: Sequence[float],
) -> ScalarField:
    """Product of 1-D plateaus over the support coordinates."""
    m = space.support_dimension
    bounds = [
        np.asarray(b, dtype=float).reshape(-1)
        for b in (inner_lower, inner_upper, outer_lower, outer_upper)
    ]
    if any(b.shape[0] != m for b in bounds):
        raise UsageError(f"box bounds need {m} components on {space}")
    il, iu, ol, ou = bounds
    if not (np.all(ol < il) and np.all(il <= iu) and np.all(iu < ou)):
        raise UsageError(
            "box cutoff needs outer_lower < inner_lower <= inner_upper < outer_upper"
        )

    def factors(X):
        vals = np.empty((X.shape[0], m))
        ders = np.empty((X.shape[0], m))
        for k in range(m):
            vals[:, k], ders[:, k] = plateau_1d(X[:, k], (il[k], iu[k]), (ol[k], ou[k]))
        return vals, ders

    def value_fn(t, X):
        return np.prod(factors(X)[0], axis=1)

    def gradient_fn(t, X):
        vals, ders = factors(X)
        g = np.zeros_like(X)
        for k in range(m):
            others = np.prod(np.delete(vals, k, axis=1), axis=1)
            g[:, k] = ders[:, k] * others
        return g

    corner = np.maximum(np.abs(ol), np.abs(ou))
    return ScalarField(
        space=space,
        value_fn=value_fn,
        gradient_fn=gradient_fn,
        support_radius=float(np.linalg.norm(corner)),
        label="box",
    )


def slope_ratio(a: float, r_max: float) -> float:
    """``max |F'(r)| / r`` for the profile ``a (1 - step(r^2 / r_max^2))``."""
    return 2.0 * abs(a) * MAX_STEP_SLOPE / (r_max * r_max)

