"""Named Hamiltonian families used by the constructions and experiments."""

import logging
import math
from dataclasses import replace
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

import numpy as np

from ..errors import UsageError
from ..geometry.spaces import Space, SpaceKind
from .cutoffs import (
    MAX_STEP_SLOPE,
    box_cutoff,
    bump,
    radial_field,
    slope_ratio,
    smooth_step,
)
from .fields import ScalarField, circle_mode, constant, coordinate

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


def radial_profile(
    a: float,
    r_max: float = 1.0,
    space: Optional[Space] = None,
    center: Optional[Sequence[float]] = None,
) -> ScalarField:
    """``F(|q|) = a (1 - step(|q|^2 / r_max^2))``.

    The profile is flat at ``a`` near the centre and 0 beyond ``r_max``.

    Raises ``UsageError`` when ``max |F'(r)| / r`` reaches ``2 pi``; below that
    the time-``t <= 1`` flow has no non-constant closed orbits of period one.
    """
    if space is None:
        space = Space.symplectic_base(1)
    if r_max <= 0:
        raise UsageError(f"r_max must be positive, got {r_max}")
    ratio = slope_ratio(a, r_max)
    if ratio >= TWO_PI:
        raise UsageError(
            f"radial profile a={a}, r_max={r_max} has slope ratio {ratio:.3f} >= 2*pi",
            {"a": a, "r_max": r_max, "slope_ratio": ratio},
        )
    inv_r2 = 1.0 / (r_max * r_max)

    def profile(r):
        step, dstep = smooth_step(r * r * inv_r2)
        return a * (1.0 - step), -2.0 * a * dstep * inv_r2

    label = f"radial(a={a:g},R={r_max:g})"
    return radial_field(space, profile, r_max, center, label=label)


def rotation_plateau(
    height: float,
    radius: float,
    support_radius: float,
    space: Optional[Space] = None,
    center: Optional[Sequence[float]] = None,
) -> ScalarField:
    """Constant ``height`` on ``B(radius)``, zero outside ``B(support_radius)``."""
    if space is None:
        space = Space.symplectic_base(1)
    if not 0 < radius < support_radius:
        raise UsageError(
            "rotation plateau needs 0 < radius < support_radius, "
            f"got {radius}, {support_radius}"
        )
    # |F'|/r is largest at the inner edge of the transition.
    ratio = abs(height) * MAX_STEP_SLOPE / ((support_radius - radius) * radius)
    if ratio >= TWO_PI:
        raise UsageError(
            f"rotation plateau height={height} is too steep for radius={radius}, "
            f"support={support_radius}",
            {"slope_ratio": ratio},
        )
    H = bump(radius, support_radius, space, center).scaled(height)
    return _relabel(H, f"plateau(h={height:g},r={radius:g},R={support_radius:g})")


def translation_generator(
    shift: float,
    plateau_radius: float,
    support_radius: float,
    space: Optional[Space] = None,
    direction: int = 0,
) -> ScalarField:
    """``-shift * y_k * rho``.

    Its time-1 flow moves ``B(plateau_radius)`` by ``shift`` along ``x_k``.
    """
    if space is None:
        space = Space.euclidean(1)
    if not 0 <= direction < space.n:
        raise UsageError(f"direction {direction} out of range for {space}")
    inner = plateau_radius + abs(shift)
    if plateau_radius <= 0 or inner >= support_radius:
        raise UsageError(
            f"translation by {shift} needs "
            "0 < plateau_radius + |shift| < support_radius, "
            f"got plateau {plateau_radius}, support {support_radius}"
        )
    if shift == 0:
        return constant(space, 0.0, label="0")
    H = coordinate(space, space.n + direction) * bump(inner, support_radius, space)
    return _relabel(H.scaled(-shift), f"translate({shift:g})")


def scaling_generator(
    a: float, r_inner: float, r_outer: float, space: Optional[Space] = None
) -> ScalarField:
    """``ln(a) (2z - <y, x>) * rho`` on ``R^{2n+1}``.

    The time-1 map is ``(ax, ay, a^2 z)`` where ``rho = 1``.
    """
    if space is None:
        space = Space.euclidean(1)
    space.require(SpaceKind.EUCLIDEAN_CONTACT)
    if a <= 0:
        raise UsageError(f"scaling factor must be positive, got {a}")
    c = math.log(a)
    if c == 0.0:
        return constant(space, 0.0, label="0")
    n = space.n
    zi = space.z_index

    def value_fn(t, X):
        return c * (2.0 * X[:, zi] - np.sum(X[:, :n] * X[:, n : 2 * n], axis=1))

    def gradient_fn(t, X):
        g = np.empty_like(X)
        g[:, :n] = -c * X[:, n : 2 * n]
        g[:, n : 2 * n] = -c * X[:, :n]
        g[:, zi] = 2.0 * c
        return g

    linear = ScalarField(space, value_fn, gradient_fn, label=f"{c:.3g}(2z-<y,x>)")
    return _relabel(linear * bump(r_inner, r_outer, space), f"scale(a={a:g})")


def reeb_box_generator(
    t: float,
    inner_lower: Sequence[float],
    inner_upper: Sequence[float],
    outer_lower: Sequence[float],
    outer_upper: Sequence[float],
    space: Optional[Space] = None,
) -> ScalarField:
    """``t * rho_box``; generates the Reeb flow for time ``t`` on the inner box."""
    if space is None:
        space = Space.euclidean(1)
    H = box_cutoff(space, inner_lower, inner_upper, outer_lower, outer_upper).scaled(t)
    return _relabel(H, f"reeb_box({t:g})")


def random_hamiltonian(
    rng: np.random.Generator,
    space: Space,
    n_terms: int = 3,
    amplitude: float = 0.1,
    radius_range: Tuple[float, float] = (0.3, 0.8),
    center_scale: float = 0.5,
    z_dependent: bool = True,
) -> ScalarField:
    """Finite sum of bumped monomials with bounded random coefficients.

    Terms are ``c * bump(r_in, r_out, center) * m`` with ``m`` one of
    ``1``, a base coordinate, or (when ``z_dependent`` and the space is
    contact) a circle mode ``sin(2 pi z + phase)``.
    """
    if n_terms < 1:
        raise UsageError("random_hamiltonian needs at least one term")
    m = space.support_dimension
    modes = ["one", "coordinate"]
    if z_dependent and space.is_contact:
        modes.append("circle")
    H: Optional[ScalarField] = None
    for _ in range(n_terms):
        r_out = float(rng.uniform(*radius_range))
        r_in = float(rng.uniform(0.2, 0.6)) * r_out
        center = rng.uniform(-center_scale, center_scale, size=m)
        c = float(rng.uniform(-amplitude, amplitude))
        mode = modes[int(rng.integers(len(modes)))]
        term = bump(r_in, r_out, space, center)
        if mode == "coordinate":
            term = term * coordinate(space, int(rng.integers(2 * space.n)))
        elif mode == "circle":
            term = term * circle_mode(space, 1, float(rng.uniform(0.0, TWO_PI)))
        term = term.scaled(c)
        H = term if H is None else H + term
    return _relabel(H, f"random({n_terms})")


def hessian_bound(
    H: ScalarField,
    lower: Sequence[float],
    upper: Sequence[float],
    points_per_axis: int = 41,
    t: float = 0.0,
) -> float:
    """Max spectral norm of the Hessian of ``H`` on a grid.

    The Hessian comes from central differences of the analytic gradient.
    """
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    axes = [np.linspace(lo, hi, points_per_axis) for lo, hi in zip(lower, upper)]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, len(axes))
    d = H.space.dimension
    if grid.shape[1] < d:
        grid = np.hstack([grid, np.zeros((grid.shape[0], d - grid.shape[1]))])
    h = 1e-5
    hess = np.empty((grid.shape[0], d, d))
    for k in range(d):
        e = np.zeros(d)
        e[k] = h
        hess[:, :, k] = (H.gradient(t, grid + e) - H.gradient(t, grid - e)) / (2.0 * h)
    hess = 0.5 * (hess + np.transpose(hess, (0, 2, 1)))
    return float(np.max(np.linalg.norm(hess, ord=2, axis=(1, 2))))


def _relabel(H: ScalarField, label: str) -> ScalarField:
    return replace(H, label=label)


FAMILIES: Dict[str, Callable[..., ScalarField]] = {
    "radial_profile": radial_profile,
    "rotation_plateau": rotation_plateau,
    "translation": translation_generator,
    "scaling": scaling_generator,
    "reeb_box": reeb_box_generator,
}


def named_hamiltonian(name: str, **params: Any) -> ScalarField:
    """Build a family member by name.

    ``named_hamiltonian("radial_profile", a=0.3)``
    """
    factory = FAMILIES.get(name)
    if factory is None:
        known = ", ".join(sorted(FAMILIES))
        raise UsageError(f"unknown Hamiltonian family '{name}'; known: {known}")
    try:
        return factory(**params)
    except TypeError as e:
        raise UsageError(f"bad parameters for {name}: {e}") from e


def random_contact_hamiltonian(
    rng: np.random.Generator,
    space: Space,
    n_terms: int = 3,
    amplitude: float = 0.05,
    radius_range: Tuple[float, float] = (0.3, 0.8),
    center_scale: float = 0.5,
) -> ScalarField:
    """Random ``z``-dependent Hamiltonian on a contact space (flows are not strict)."""
    if not space.is_contact:
        raise UsageError(
            f"random contact Hamiltonians need a contact space, got {space}"
        )
    return random_hamiltonian(
        rng, space, n_terms, amplitude, radius_range, center_scale, z_dependent=True
    )
