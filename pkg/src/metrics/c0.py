"""Sampled sup-norm estimates: C^0 distances and the projection pseudo-norm.

Estimates are grid maxima (lower bounds). When certification is requested
a Lipschitz bound of the displacement is read off grid-neighbour
differences, inflated by a safety factor, and turned into
``certified_upper = lower + L * mesh``. The Lipschitz bound is a
finite-difference estimate, so the upper bound is heuristic.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ..config import get_settings
from ..errors import SupportLeakageError, UsageError
from ..flows.maps import FlowMap
from ..geometry.spaces import Space, circle_displacement, coordinate_difference

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SampleRegion:
    """Axis-aligned box in full coordinates; the circle axis spans ``[0, 1)``."""

    space: Space
    lower: Tuple[float, ...]
    upper: Tuple[float, ...]

    def __post_init__(self):
        d = self.space.dimension
        if len(self.lower) != d or len(self.upper) != d:
            raise UsageError(f"sample regions on {self.space} need {d} bounds per side")
        if any(hi < lo for lo, hi in zip(self.lower, self.upper)):
            raise UsageError("sample region bounds must satisfy lower <= upper")

    @classmethod
    def box(
        cls, space: Space, lower: Sequence[float], upper: Sequence[float]
    ) -> "SampleRegion":
        """Box over the support coordinates.

        The full circle is appended on the prequantized space.
        """
        lower = [float(v) for v in np.asarray(lower).reshape(-1)]
        upper = [float(v) for v in np.asarray(upper).reshape(-1)]
        if space.wraps and len(lower) == space.support_dimension:
            lower.append(0.0)
            upper.append(1.0)
        return cls(space, tuple(lower), tuple(upper))

    @classmethod
    def around(
        cls,
        space: Space,
        radius: float,
        center: Optional[Sequence[float]] = None,
        inflate: float = 0.1,
    ) -> "SampleRegion":
        if not math.isfinite(radius):
            raise UsageError(
                "cannot sample around an unbounded support; pass an explicit region"
            )
        m = space.support_dimension
        c = np.zeros(m) if center is None else np.asarray(center, dtype=float)[:m]
        half = max(radius, 1e-3) * (1.0 + inflate)
        return cls.box(space, c - half, c + half)

    def inflated(self, factor: float) -> "SampleRegion":
        lower = list(self.lower)
        upper = list(self.upper)
        for k in range(self.space.support_dimension):
            mid = 0.5 * (lower[k] + upper[k])
            half = 0.5 * (upper[k] - lower[k]) * factor
            lower[k], upper[k] = mid - half, mid + half
        return SampleRegion(self.space, tuple(lower), tuple(upper))

    def grid(self, mesh: float, min_points: int = 5, max_points: Optional[int] = None):
        """Grid points, grid shape and per-axis spacing.

        The mesh is coarsened while the grid holds more than ``max_points``.
        """
        if mesh <= 0:
            raise UsageError(f"mesh must be positive, got {mesh}")
        d = self.space.dimension
        circle = self.space.z_index if self.space.wraps else None
        while True:
            axes = []
            for k in range(d):
                lo, hi = self.lower[k], self.upper[k]
                if k == circle:
                    count = max(min_points, int(math.ceil((hi - lo) / mesh)))
                    axes.append(lo + (hi - lo) * np.arange(count) / count)
                else:
                    count = max(min_points, int(math.ceil((hi - lo) / mesh)) + 1)
                    axes.append(np.linspace(lo, hi, count))
            total = int(np.prod([len(a) for a in axes]))
            if max_points is None or total <= max_points:
                break
            mesh *= (total / max_points) ** (1.0 / d) * 1.01
        shape = tuple(len(a) for a in axes)
        spacing = np.array([(a[1] - a[0]) if len(a) > 1 else 0.0 for a in axes])
        points = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, d)
        return points, shape, spacing


@dataclass(frozen=True)
class SupEstimate:
    lower: float
    mesh: Optional[float]
    lipschitz_bound: Optional[float]
    certified_upper: Optional[float]
    samples: int
    argmax: Optional[Tuple[float, ...]] = None
    heuristic: bool = True

    @property
    def upper(self) -> float:
        """Certified upper bound when available, the lower estimate otherwise."""
        return self.certified_upper if self.certified_upper is not None else self.lower

    def as_dict(self) -> dict:
        return {
            "lower": self.lower,
            "mesh": self.mesh,
            "lipschitz_bound": self.lipschitz_bound,
            "certified_upper": self.certified_upper,
            "samples": self.samples,
            "heuristic": self.heuristic,
        }


Regions = Union[SampleRegion, Sequence[SampleRegion]]


def _displacements(
    f: FlowMap, g: Optional[FlowMap], X: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """Vector displacement ``g(x) -> f(x)`` and signed circle displacement of ``f``.

    ``g`` defaults to the identity.
    """
    space = f.space
    fx = f.apply(X)
    gx = X if g is None else g.apply(X)
    vector = coordinate_difference(space, gx, fx)
    if space.wraps:
        zi = space.z_index
        circle = np.asarray(circle_displacement(X[:, zi], fx[:, zi]), dtype=float)
    else:
        circle = np.zeros(X.shape[0])
    return vector, circle


def _lipschitz(
    values: np.ndarray, shape: Tuple[int, ...], spacing: np.ndarray
) -> float:
    """Max over grid points of the norm of neighbour difference quotients."""
    grid = values.reshape(*shape, -1)
    squares = np.zeros(shape)
    for axis, h in enumerate(spacing):
        if shape[axis] < 2 or h == 0:
            continue
        diff = np.diff(grid, axis=axis) / h
        quotient = np.sum(diff * diff, axis=-1)
        pad = [(0, 0)] * len(shape)
        pad[axis] = (0, 1)
        squares += np.pad(quotient, pad, mode="edge")
    return float(np.sqrt(np.max(squares)))


def _boundary_mask(shape: Tuple[int, ...], axes: Sequence[int]) -> np.ndarray:
    mask = np.zeros(shape, dtype=bool)
    for axis in axes:
        index = [slice(None)] * len(shape)
        index[axis] = 0
        mask[tuple(index)] = True
        index[axis] = -1
        mask[tuple(index)] = True
    return mask.reshape(-1)


@dataclass
class _RegionPass:
    c0: SupEstimate
    projection: SupEstimate
    leak: float


def _estimate_region(
    f: FlowMap,
    g: Optional[FlowMap],
    region: SampleRegion,
    mesh: float,
    certify: bool,
) -> _RegionPass:
    settings = get_settings()
    X, shape, spacing = region.grid(
        mesh, settings.min_points_per_axis, settings.max_grid_points
    )
    vector, signed = _displacements(f, g, X)
    circle = np.abs(signed)
    norms = np.linalg.norm(vector, axis=1)
    leak = float(np.max(norms[_boundary_mask(shape, range(f.space.support_dimension))]))
    h = float(np.max(spacing))
    best = int(np.argmax(norms))
    best_circle = int(np.argmax(circle))
    c0_lip = proj_lip = None
    c0_upper = proj_upper = None
    if certify:
        c0_lip = settings.lipschitz_safety * _lipschitz(vector, shape, spacing)
        proj_lip = settings.lipschitz_safety * _lipschitz(
            signed[:, None], shape, spacing
        )
        c0_upper = float(norms[best]) + c0_lip * h
        proj_upper = float(circle[best_circle]) + proj_lip * h
    c0 = SupEstimate(
        float(norms[best]), h, c0_lip, c0_upper, len(X), _as_tuple(X[best])
    )
    proj = SupEstimate(
        float(circle[best_circle]),
        h,
        proj_lip,
        proj_upper,
        len(X),
        _as_tuple(X[best_circle]),
    )
    return _RegionPass(c0, proj, leak)


def _as_tuple(row: np.ndarray) -> Tuple[float, ...]:
    return tuple(float(v) for v in row)


def _combine(estimates: List[SupEstimate]) -> SupEstimate:
    best = max(estimates, key=lambda e: e.lower)
    uppers = [e.certified_upper for e in estimates]
    lips = [e.lipschitz_bound for e in estimates]
    meshes = [e.mesh for e in estimates if e.mesh is not None]
    return SupEstimate(
        lower=best.lower,
        mesh=max(meshes) if meshes else None,
        lipschitz_bound=None if any(v is None for v in lips) else max(lips),
        certified_upper=None if any(v is None for v in uppers) else max(uppers),
        samples=sum(e.samples for e in estimates),
        argmax=best.argmax,
    )


def displacement_estimates(
    f: FlowMap,
    g: Optional[FlowMap] = None,
    region: Optional[Regions] = None,
    mesh: Optional[float] = None,
    certify: bool = True,
    check_leakage: bool = True,
) -> Tuple[SupEstimate, SupEstimate]:
    """C^0 distance from ``f`` to ``g`` and the projection pseudo-norm of ``f``.

    Both come from one pass over the grid.
    """
    if g is not None and g.space != f.space:
        raise UsageError(f"cannot compare maps on {f.space} and {g.space}")
    settings = get_settings()
    mesh = settings.mesh if mesh is None else mesh
    if region is None:
        radius = max(f.support_radius, g.support_radius if g is not None else 0.0)
        regions = [SampleRegion.around(f.space, radius)]
    elif isinstance(region, SampleRegion):
        regions = [region]
    else:
        regions = list(region)
    if not regions:
        raise UsageError("at least one sample region is required")

    passes = []
    for reg in regions:
        result = _estimate_region(f, g, reg, mesh, certify)
        if check_leakage and result.leak > settings.leakage_tol:
            logger.warning(
                f"Displacement {result.leak:.2e} on the boundary of {reg}; "
                "inflating once"
            )
            reg = reg.inflated(1.5)
            result = _estimate_region(f, g, reg, mesh, certify)
            if result.leak > settings.leakage_tol:
                raise SupportLeakageError(
                    f"support of {f.label} is not contained in the sample region",
                    {
                        "boundary_displacement": result.leak,
                        "lower": list(reg.lower),
                        "upper": list(reg.upper),
                    },
                )
        passes.append(result)
    return _combine([p.c0 for p in passes]), _combine([p.projection for p in passes])


def c0_distance(
    f: FlowMap,
    g: FlowMap,
    region: Optional[Regions] = None,
    mesh: Optional[float] = None,
    certify: bool = True,
    check_leakage: bool = True,
) -> SupEstimate:
    """``sup_x d(f(x), g(x))`` over the sampled region(s)."""
    return displacement_estimates(f, g, region, mesh, certify, check_leakage)[0]


def c0_norm(
    f: FlowMap,
    region: Optional[Regions] = None,
    mesh: Optional[float] = None,
    certify: bool = True,
    check_leakage: bool = True,
) -> SupEstimate:
    """``sup_x d(f(x), x)``."""
    return displacement_estimates(f, None, region, mesh, certify, check_leakage)[0]


def projection_distance(
    phi: FlowMap,
    region: Optional[Regions] = None,
    mesh: Optional[float] = None,
    certify: bool = True,
    check_leakage: bool = True,
) -> SupEstimate:
    """``sup_x |theta(phi(x)) - theta(x)|`` in the circle distance."""
    if not phi.space.wraps:
        raise UsageError(
            "the projection pseudo-norm is defined on the prequantized space, "
            f"got {phi.space}"
        )
    return displacement_estimates(phi, None, region, mesh, certify, check_leakage)[1]


def sampled_distance(
    f: FlowMap, g: Optional[FlowMap], samples: np.ndarray
) -> SupEstimate:
    """Lower estimate over an explicit sample array (no certification)."""
    X = f.space.check_coords(samples)
    vector, _ = _displacements(f, g, X)
    norms = np.linalg.norm(vector, axis=1)
    best = int(np.argmax(norms))
    return SupEstimate(
        float(norms[best]), None, None, None, len(X), _as_tuple(X[best])
    )
