"""Ambient spaces, points and tangent vectors.

Coordinates are laid out as ``(x_1..x_n, y_1..y_n[, z])``. On the
prequantized space ``R^{2n} x S^1`` the last coordinate is the circle
coordinate, stored in ``[0, 1)``.
"""

import enum
import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from ..errors import UsageError

logger = logging.getLogger(__name__)

ArrayLike = Union[np.ndarray, float]


class SpaceKind(str, enum.Enum):
    EUCLIDEAN_CONTACT = "euclidean_contact"
    PREQUANTIZED = "prequantized"
    SYMPLECTIC_BASE = "symplectic_base"


@dataclass(frozen=True)
class Space:
    """One of the three model spaces, tagged with its half-dimension ``n``."""

    kind: SpaceKind
    n: int = 1

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise UsageError(f"half-dimension must be a positive integer, got {self.n}")

    @classmethod
    def euclidean(cls, n: int = 1) -> "Space":
        return cls(SpaceKind.EUCLIDEAN_CONTACT, n)

    @classmethod
    def prequantized(cls, n: int = 1) -> "Space":
        return cls(SpaceKind.PREQUANTIZED, n)

    @classmethod
    def symplectic_base(cls, n: int = 1) -> "Space":
        return cls(SpaceKind.SYMPLECTIC_BASE, n)

    @property
    def dimension(self) -> int:
        return 2 * self.n if self.kind == SpaceKind.SYMPLECTIC_BASE else 2 * self.n + 1

    @property
    def is_contact(self) -> bool:
        return self.kind != SpaceKind.SYMPLECTIC_BASE

    @property
    def wraps(self) -> bool:
        return self.kind == SpaceKind.PREQUANTIZED

    @property
    def z_index(self) -> int:
        if not self.is_contact:
            raise UsageError("the symplectic base has no z coordinate")
        return 2 * self.n

    @property
    def support_dimension(self) -> int:
        """Number of coordinates that carry compact support (all but the circle)."""
        return 2 * self.n if self.wraps else self.dimension

    def base_space(self) -> "Space":
        return Space.symplectic_base(self.n)

    def prequantization(self) -> "Space":
        return Space.prequantized(self.n)

    def require(self, *kinds: SpaceKind) -> None:
        if self.kind not in kinds:
            allowed = ", ".join(k.value for k in kinds)
            raise UsageError(
                f"operation requires a space of kind {allowed}, got {self.kind.value}"
            )

    def check_coords(self, coords: np.ndarray) -> np.ndarray:
        """Return ``coords`` as a float array of shape ``(N, dimension)``."""
        arr = np.asarray(coords, dtype=float)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.ndim != 2 or arr.shape[1] != self.dimension:
            raise UsageError(
                f"expected coordinates with {self.dimension} components, "
                f"got shape {np.shape(coords)}"
            )
        return arr

    def wrap(self, coords: np.ndarray) -> np.ndarray:
        """Copy of ``coords`` with the circle coordinate reduced to ``[0, 1)``."""
        out = np.array(coords, dtype=float, copy=True)
        if self.wraps:
            out[..., self.z_index] = wrap_unit(out[..., self.z_index])
        return out

    def support_coords(self, coords: np.ndarray) -> np.ndarray:
        """The coordinates that enter support radii."""
        return np.asarray(coords)[..., : self.support_dimension]

    def support_norm(self, coords: np.ndarray) -> np.ndarray:
        return np.linalg.norm(self.support_coords(coords), axis=-1)

    def __str__(self) -> str:
        return f"{self.kind.value}(n={self.n})"


def wrap_unit(values: ArrayLike) -> np.ndarray:
    """Reduce reals to ``[0, 1)``; ``-1e-17`` maps to ``0.0`` rather than ``1.0``."""
    w = np.mod(values, 1.0)
    return np.where(w >= 1.0, 0.0, w)


def circle_displacement(theta_from: ArrayLike, theta_to: ArrayLike) -> np.ndarray:
    """Signed shortest displacement on ``R/Z``, valued in ``(-1/2, 1/2]``.

    A displacement of exactly one half is reported as ``+1/2``.
    """
    start = np.asarray(theta_from, dtype=float)
    d = np.mod(np.asarray(theta_to, dtype=float) - start, 1.0)
    d = np.where(d >= 1.0, 0.0, d)
    result = np.where(d > 0.5, d - 1.0, d)
    if np.ndim(result) == 0:
        return float(result)
    return result


def coordinate_difference(
    space: Space, start: np.ndarray, end: np.ndarray
) -> np.ndarray:
    """``end - start`` with the circle component replaced by its circle displacement."""
    start = np.asarray(start, dtype=float)
    end = np.asarray(end, dtype=float)
    diff = end - start
    if space.wraps:
        z = space.z_index
        diff[..., z] = circle_displacement(start[..., z], end[..., z])
    return diff


def distance_array(space: Space, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Batched ambient distance (product of Euclidean and circle metrics)."""
    return np.linalg.norm(coordinate_difference(space, a, b), axis=-1)


@dataclass(frozen=True, eq=False)
class Point:
    """A point of a :class:`Space`; immutable, circle coordinate kept in ``[0, 1)``."""

    space: Space
    coords: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coords, dtype=float).reshape(-1)
        if arr.shape[0] != self.space.dimension:
            raise UsageError(
                f"{self.space} points have {self.space.dimension} coordinates, "
                f"got {arr.shape[0]}"
            )
        if not np.all(np.isfinite(arr)):
            raise UsageError("point coordinates must be finite")
        arr = self.space.wrap(arr)
        arr.setflags(write=False)
        object.__setattr__(self, "coords", arr)

    @classmethod
    def from_parts(cls, space: Space, x, y, z: Optional[float] = None) -> "Point":
        parts = [np.atleast_1d(np.asarray(v, dtype=float)) for v in (x, y)]
        if space.is_contact:
            if z is None:
                raise UsageError(f"{space} points need a z coordinate")
            parts.append(np.array([z], dtype=float))
        return cls(space, np.concatenate(parts))

    @property
    def x(self) -> np.ndarray:
        return self.coords[: self.space.n]

    @property
    def y(self) -> np.ndarray:
        return self.coords[self.space.n : 2 * self.space.n]

    @property
    def z(self) -> float:
        return float(self.coords[self.space.z_index])

    @property
    def base(self) -> np.ndarray:
        return self.coords[: 2 * self.space.n]

    def __repr__(self) -> str:
        return f"Point({self.space}, {np.array2string(self.coords, precision=6)})"


@dataclass(frozen=True, eq=False)
class TangentVector:
    """A tangent vector attached to ``base``."""

    base: Point
    components: np.ndarray

    def __post_init__(self):
        arr = np.array(self.components, dtype=float).reshape(-1)
        if arr.shape[0] != self.base.space.dimension:
            raise UsageError(
                "tangent vector components do not match the base point's space"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "components", arr)

    @property
    def space(self) -> Space:
        return self.base.space


def ambient_distance(p: Point, q: Point) -> float:
    """Distance in the product metric.

    The circle factor uses ``|circle_displacement|``.
    """
    if p.space != q.space:
        raise UsageError(f"points live in different spaces: {p.space} vs {q.space}")
    return float(distance_array(p.space, p.coords, q.coords))
