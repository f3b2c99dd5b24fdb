"""Cut-off contact squeezing ``(x, y, z) -> (ax, ay, a^2 z)`` of ``R^{2n+1}``."""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..errors import ConstructionError, UsageError
from ..flows.isotopy import Isotopy, Tolerance
from ..flows.maps import FlowMap, IntegratedFlowMap
from ..geometry.spaces import Space
from ..hamiltonians.families import scaling_generator
from ..hamiltonians.fields import contact_vector_field
from ..utils.grids import ball_samples

logger = logging.getLogger(__name__)

# Fraction of (R - r) left between B(r) and the plateau, and between the
# cutoff and B(R); tried in order until the verification sweep passes.
MARGINS: Sequence[float] = (0.10, 0.05, 0.20, 0.02)

SCALING_TOL = 1e-5
IDENTITY_TOL = 1e-6


def scaling(space: Space, a: float, coords: np.ndarray) -> np.ndarray:
    """The linear contact scaling itself."""
    out = np.array(coords, dtype=float, copy=True)
    out[..., : 2 * space.n] *= a
    out[..., space.z_index] *= a * a
    return out


@dataclass
class SqueezeMap:
    """A verified squeeze together with its construction data."""

    a: float
    r: float
    R: float
    map: FlowMap
    margin: float
    max_scaling_error: float
    max_identity_error: float

    @property
    def space(self) -> Space:
        return self.map.space

    @property
    def support_radius(self) -> float:
        return self.map.support_radius


def _sweep(f: FlowMap, a: float, r: float, R: float, samples: int, seed: int):
    space = f.space
    d = space.dimension
    rng = np.random.default_rng(seed)
    inside = ball_samples(rng, samples, d, r)
    outside = ball_samples(rng, samples, d, R + 1.0, inner_radius=R)
    scaled = scaling(space, a, inside)
    scaling_error = float(np.max(np.linalg.norm(f.apply(inside) - scaled, axis=1)))
    identity_error = float(np.max(np.linalg.norm(f.apply(outside) - outside, axis=1)))
    return scaling_error, identity_error


def squeeze(
    a: float,
    r: float,
    R: float,
    n: int = 1,
    tolerance: Optional[Tolerance] = None,
    sweep_samples: int = 1000,
    seed: int = 0,
) -> SqueezeMap:
    """Contactomorphism scaling by ``a`` on ``B(r)``, the identity outside ``B(R)``.

    Raises ``UsageError`` unless ``0 < a <= 1`` and ``0 < r < R``, and
    ``ConstructionError`` if no cutoff margin passes the verification sweep.
    """
    if not 0 < a <= 1:
        raise UsageError(f"squeeze factor must lie in (0, 1], got {a}")
    if not 0 < r < R:
        raise UsageError(f"squeeze radii need 0 < r < R, got {r}, {R}")
    space = Space.euclidean(n)
    last = None
    for margin in MARGINS:
        gap = margin * (R - r)
        H = scaling_generator(a, r + gap, R - gap, space)
        f = IntegratedFlowMap(
            Isotopy(contact_vector_field(H), 1.0, tolerance),
            0.0,
            1.0,
            label=f"squeeze({a:g},{r:g},{R:g})",
        )
        f.support_radius = min(f.support_radius, R - gap)
        scaling_error, identity_error = _sweep(f, a, r, R, sweep_samples, seed)
        last = (margin, scaling_error, identity_error)
        if scaling_error < SCALING_TOL and identity_error < IDENTITY_TOL:
            logger.info(
                f"Squeeze a={a} r={r} R={R}: margin {margin}, "
                f"scaling error {scaling_error:.2e}"
            )
            return SqueezeMap(a, r, R, f, margin, scaling_error, identity_error)
        logger.warning(
            f"Squeeze a={a} r={r} R={R} margin {margin} failed verification: "
            f"scaling {scaling_error:.2e}, identity {identity_error:.2e}"
        )
    raise ConstructionError(
        f"squeeze(a={a}, r={r}, R={R}) failed verification for every margin",
        {"margin": last[0], "scaling_error": last[1], "identity_error": last[2]},
    )
