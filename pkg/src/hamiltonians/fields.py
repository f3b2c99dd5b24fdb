"""Scalar fields, vector fields and the contact/symplectic field formulas.

Fields are vectorized: ``value(t, X)`` takes ``X`` of shape ``(N, d)`` and
returns ``(N,)``; ``gradient(t, X)`` returns ``(N, d)``. On the prequantized
space the circle coordinate is wrapped before evaluation, so callers may pass
unwrapped trajectories.
"""

import logging
import math
from dataclasses import dataclass, replace
from typing import Callable, Optional, Tuple, Union

import numpy as np

from ..errors import UsageError
from ..geometry.spaces import Point, Space, TangentVector

logger = logging.getLogger(__name__)

ValueFn = Callable[[float, np.ndarray], np.ndarray]
GradientFn = Callable[[float, np.ndarray], np.ndarray]
RhsFn = Callable[[float, np.ndarray], Tuple[np.ndarray, np.ndarray]]


@dataclass(frozen=True)
class ScalarField:
    """A smooth, possibly time-dependent function with an analytic gradient.

    ``support_radius`` bounds the support in the support coordinates of
    ``space`` (all coordinates, or the base coordinates on the prequantized
    space); ``math.inf`` means no compact support is claimed.
    """

    space: Space
    value_fn: ValueFn
    gradient_fn: GradientFn
    support_radius: float = math.inf
    label: str = "H"
    autonomous: bool = True

    def _prepare(self, coords: np.ndarray) -> np.ndarray:
        return self.space.wrap(self.space.check_coords(coords))

    def value(self, t: float, coords: np.ndarray) -> np.ndarray:
        return np.asarray(self.value_fn(float(t), self._prepare(coords)), dtype=float)

    def gradient(self, t: float, coords: np.ndarray) -> np.ndarray:
        grad = self.gradient_fn(float(t), self._prepare(coords))
        return np.asarray(grad, dtype=float)

    def at(self, t: float, point: Point) -> float:
        self._check_point(point)
        return float(self.value(t, point.coords)[0])

    def gradient_at(self, t: float, point: Point) -> np.ndarray:
        self._check_point(point)
        return self.gradient(t, point.coords)[0]

    def _check_point(self, point: Point) -> None:
        if point.space != self.space:
            raise UsageError(
                f"{self.label} is defined on {self.space}, point lives in {point.space}"
            )

    def _check_compatible(self, other: "ScalarField") -> None:
        if other.space != self.space:
            raise UsageError(f"cannot combine fields on {self.space} and {other.space}")

    def __add__(self, other: "ScalarField") -> "ScalarField":
        self._check_compatible(other)
        return ScalarField(
            space=self.space,
            value_fn=lambda t, X: self.value_fn(t, X) + other.value_fn(t, X),
            gradient_fn=lambda t, X: self.gradient_fn(t, X) + other.gradient_fn(t, X),
            support_radius=max(self.support_radius, other.support_radius),
            label=f"({self.label} + {other.label})",
            autonomous=self.autonomous and other.autonomous,
        )

    def __mul__(self, other: Union["ScalarField", float]) -> "ScalarField":
        if isinstance(other, ScalarField):
            self._check_compatible(other)

            def value_fn(t, X):
                return self.value_fn(t, X) * other.value_fn(t, X)

            def gradient_fn(t, X):
                f = self.value_fn(t, X)[:, None]
                g = other.value_fn(t, X)[:, None]
                return f * other.gradient_fn(t, X) + g * self.gradient_fn(t, X)

            return ScalarField(
                space=self.space,
                value_fn=value_fn,
                gradient_fn=gradient_fn,
                support_radius=min(self.support_radius, other.support_radius),
                label=f"{self.label}*{other.label}",
                autonomous=self.autonomous and other.autonomous,
            )
        return self.scaled(float(other))

    __rmul__ = __mul__

    def __neg__(self) -> "ScalarField":
        return self.scaled(-1.0)

    def scaled(self, c: float) -> "ScalarField":
        support = 0.0 if c == 0.0 else self.support_radius
        return replace(
            self,
            value_fn=lambda t, X: c * self.value_fn(t, X),
            gradient_fn=lambda t, X: c * self.gradient_fn(t, X),
            support_radius=support,
            label=f"{c:g}*{self.label}",
        )

    def reparametrized(
        self, s: Callable[[float], float], ds: Callable[[float], float]
    ) -> "ScalarField":
        """Generator of ``t -> phi_{s(t)}``: ``s'(t) H_{s(t)}``."""
        return replace(
            self,
            value_fn=lambda t, X: ds(t) * self.value_fn(s(t), X),
            gradient_fn=lambda t, X: ds(t) * self.gradient_fn(s(t), X),
            label=f"{self.label}∘s",
            autonomous=False,
        )


def constant(space: Space, c: float, label: Optional[str] = None) -> ScalarField:
    d = space.dimension
    return ScalarField(
        space=space,
        value_fn=lambda t, X: np.full(X.shape[0], float(c)),
        gradient_fn=lambda t, X: np.zeros((X.shape[0], d)),
        support_radius=0.0 if c == 0 else math.inf,
        label=label or f"{c:g}",
    )


def coordinate(space: Space, index: int) -> ScalarField:
    """The linear function ``X -> X[index]``."""
    if not 0 <= index < space.dimension:
        raise UsageError(f"coordinate index {index} out of range for {space}")
    if space.wraps and index == space.z_index:
        raise UsageError(
            "the circle coordinate is not a function on the prequantized space"
        )

    def gradient_fn(t, X):
        g = np.zeros_like(X)
        g[:, index] = 1.0
        return g

    return ScalarField(
        space, lambda t, X: X[:, index].copy(), gradient_fn, label=f"X{index}"
    )


def circle_mode(space: Space, frequency: int = 1, phase: float = 0.0) -> ScalarField:
    """``sin(2 pi k z + phase)``, periodic in ``z`` and so defined on ``R^2n x S^1``."""
    if not space.is_contact:
        raise UsageError("circle modes need a z coordinate")
    z = space.z_index
    w = 2.0 * math.pi * frequency

    def gradient_fn(t, X):
        g = np.zeros_like(X)
        g[:, z] = w * np.cos(w * X[:, z] + phase)
        return g

    return ScalarField(
        space,
        lambda t, X: np.sin(w * X[:, z] + phase),
        gradient_fn,
        label=f"sin({frequency}z{phase:+.2f})",
    )


@dataclass(frozen=True)
class VectorField:
    """A time-dependent vector field together with a scalar density.

    ``rhs(t, X)`` returns ``(V, density)``. For contact fields the density is
    ``dH(R)``, whose time integral is the log of the conformal factor. For
    symplectic fields it is ``H + sum y_i dx_i/dt``, whose time integral is
    the point action with respect to ``-sum y dx``.
    """

    space: Space
    rhs: RhsFn
    generator: Optional[ScalarField] = None
    label: str = "X"

    def __call__(self, t: float, coords: np.ndarray) -> np.ndarray:
        return self.rhs(float(t), self.space.check_coords(coords))[0]

    def density(self, t: float, coords: np.ndarray) -> np.ndarray:
        return self.rhs(float(t), self.space.check_coords(coords))[1]

    def eval(self, t: float, point: Point) -> TangentVector:
        if point.space != self.space:
            raise UsageError(
                f"{self.label} is defined on {self.space}, point lives in {point.space}"
            )
        return TangentVector(point, self(t, point.coords)[0])

    @property
    def support_radius(self) -> float:
        return self.generator.support_radius if self.generator is not None else math.inf


def contact_vector_field(H: ScalarField) -> VectorField:
    """Contact vector field of ``H`` for ``alpha0 = dz - sum y dx``.

    ``x' = -H_y``, ``y' = H_x + y H_z``, ``z' = H - sum y H_y``.
    """
    space = H.space
    if not space.is_contact:
        raise UsageError(f"contact vector fields need a contact space, got {space}")
    n = space.n
    zi = space.z_index

    def rhs(t: float, X: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        h = H.value(t, X)
        g = H.gradient(t, X)
        y = X[:, n : 2 * n]
        gy = g[:, n : 2 * n]
        gz = g[:, zi]
        V = np.empty_like(X)
        V[:, :n] = -gy
        V[:, n : 2 * n] = g[:, :n] + y * gz[:, None]
        V[:, zi] = h - np.sum(y * gy, axis=1)
        return V, gz

    return VectorField(space, rhs, generator=H, label=f"X_{H.label}")


def symplectic_vector_field(H: ScalarField) -> VectorField:
    """Hamiltonian vector field of ``H`` for ``omega0 = sum dx ^ dy``.

    ``x' = -H_y``, ``y' = H_x``; the density is the action integrand
    ``H - sum y H_y``.
    """
    space = H.space
    if space.is_contact:
        raise UsageError(f"symplectic vector fields live on the base, got {space}")
    n = space.n

    def rhs(t: float, X: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        h = H.value(t, X)
        g = H.gradient(t, X)
        gy = g[:, n:]
        V = np.empty_like(X)
        V[:, :n] = -gy
        V[:, n:] = g[:, :n]
        return V, h - np.sum(X[:, n:] * gy, axis=1)

    return VectorField(space, rhs, generator=H, label=f"X_{H.label}")


def reeb_field(space: Space) -> VectorField:
    """The Reeb field ``d/dz``, generated by the constant Hamiltonian 1."""
    return contact_vector_field(constant(space, 1.0, label="1"))
