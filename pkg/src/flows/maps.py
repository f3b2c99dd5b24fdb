"""Maps produced by integration or closed formulas, and their compositions.

Every map reports, besides the image, two scalars per point:

* ``travel``: the unwrapped change of the circle/``z`` coordinate along the
  defining path on contact spaces; on the symplectic base it is the point
  action ``int (H + sum y dx/dt) dt`` (the ``z``-travel of the lift).
* ``log_conformal``: ``g`` with ``f^* alpha = e^g alpha`` (zero on the base).

Both are additive under composition, the way path actions and conformal
factors compose.
"""

import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import UsageError
from ..geometry.spaces import Point, Space, circle_displacement
from .isotopy import Isotopy

logger = logging.getLogger(__name__)

CoordFn = Callable[[np.ndarray], np.ndarray]


@dataclass
class MapResult:
    image: np.ndarray
    travel: np.ndarray
    log_conformal: np.ndarray


class FlowMap(ABC):
    """A diffeomorphism of ``space`` with travel and conformal bookkeeping."""

    def __init__(
        self, space: Space, support_radius: float = math.inf, label: str = "f"
    ):
        self.space = space
        self.support_radius = float(support_radius)
        self.label = label

    @abstractmethod
    def transport(self, coords: np.ndarray) -> MapResult:
        """Image, travel and log conformal factor for each row of ``coords``."""

    @abstractmethod
    def inverse(self) -> "FlowMap":
        pass

    def apply(self, coords: np.ndarray) -> np.ndarray:
        return self.transport(coords).image

    def apply_inverse(self, coords: np.ndarray) -> np.ndarray:
        return self.inverse().apply(coords)

    def apply_with_travel(
        self, coords: np.ndarray
    ) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        result = self.transport(coords)
        return result.image, result.travel, result.log_conformal

    def __call__(self, p: Union[Point, np.ndarray]) -> Union[Point, np.ndarray]:
        if isinstance(p, Point):
            if p.space != self.space:
                raise UsageError(
                    f"{self.label} acts on {self.space}, point lives in {p.space}"
                )
            return Point(self.space, self.apply(p.coords)[0])
        return self.apply(p)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label!r} on {self.space})"


class IntegratedFlowMap(FlowMap):
    """``phi_{t_to} o phi_{t_from}^{-1}`` for an :class:`Isotopy`."""

    def __init__(
        self,
        isotopy: Isotopy,
        t_from: float,
        t_to: float,
        label: Optional[str] = None,
    ):
        super().__init__(
            isotopy.space,
            isotopy.field.support_radius,
            label or f"phi[{isotopy.field.label}]_{t_from:g}->{t_to:g}",
        )
        self.isotopy = isotopy
        self.t_from = float(t_from)
        self.t_to = float(t_to)

    def transport(self, coords: np.ndarray) -> MapResult:
        X = self.space.check_coords(coords)
        end, acc = self.isotopy.advance(X, self.t_from, self.t_to)
        if self.space.is_contact:
            zi = self.space.z_index
            travel = end[:, zi] - X[:, zi]
            log_conformal = acc
        else:
            travel = acc
            log_conformal = np.zeros(X.shape[0])
        return MapResult(self.space.wrap(end), travel, log_conformal)

    def inverse(self) -> "IntegratedFlowMap":
        return IntegratedFlowMap(
            self.isotopy, self.t_to, self.t_from, label=f"{self.label}^-1"
        )


class ExplicitMap(FlowMap):
    """A map given by closed formulas.

    Without a ``travel_fn`` the travel on the prequantized space is the circle
    displacement of ``z``, which is the path travel for maps isotopic to the
    identity through maps moving ``z`` by less than one half.
    """

    def __init__(
        self,
        space: Space,
        forward: CoordFn,
        backward: CoordFn,
        travel_fn: Optional[CoordFn] = None,
        log_conformal_fn: Optional[CoordFn] = None,
        support_radius: float = math.inf,
        label: str = "explicit",
    ):
        super().__init__(space, support_radius, label)
        self._forward = forward
        self._backward = backward
        self._travel_fn = travel_fn
        self._log_conformal_fn = log_conformal_fn

    def transport(self, coords: np.ndarray) -> MapResult:
        X = self.space.check_coords(coords)
        image = self.space.wrap(self._forward(X))
        if self._travel_fn is not None:
            travel = np.asarray(self._travel_fn(X), dtype=float)
        elif self.space.wraps:
            zi = self.space.z_index
            travel = circle_displacement(X[:, zi], image[:, zi])
        elif self.space.is_contact:
            zi = self.space.z_index
            travel = image[:, zi] - X[:, zi]
        else:
            travel = np.zeros(X.shape[0])
        if self._log_conformal_fn is not None:
            log_conformal = np.asarray(self._log_conformal_fn(X), dtype=float)
        else:
            log_conformal = np.zeros(X.shape[0])
        travel = np.asarray(travel, dtype=float).reshape(-1)
        return MapResult(image, travel, log_conformal)

    def _pulled_back(self, fn: Optional[CoordFn]) -> Optional[CoordFn]:
        """``-fn(backward(X))``, the bookkeeping channel of the inverse."""
        if fn is None:
            return None

        def inverse_fn(X):
            return -np.asarray(fn(self._backward(X)))

        return inverse_fn

    def inverse(self) -> "ExplicitMap":
        inv_travel = self._pulled_back(self._travel_fn)
        inv_log = self._pulled_back(self._log_conformal_fn)
        return ExplicitMap(
            self.space,
            self._backward,
            self._forward,
            inv_travel,
            inv_log,
            self.support_radius,
            f"{self.label}^-1",
        )


def identity_map(space: Space) -> ExplicitMap:
    return ExplicitMap(
        space, lambda X: X.copy(), lambda X: X.copy(), support_radius=0.0, label="id"
    )


def translation_map(space: Space, shift: float, direction: int = 0) -> ExplicitMap:
    """Global translation ``x_k -> x_k + shift``.

    A strict contactomorphism on contact spaces.
    """
    if not 0 <= direction < space.n:
        raise UsageError(f"direction {direction} out of range for {space}")

    def move(delta):
        def fn(X):
            Y = X.copy()
            Y[:, direction] += delta
            return Y

        return fn

    zero = lambda X: np.zeros(X.shape[0])  # noqa: E731
    return ExplicitMap(
        space, move(shift), move(-shift), zero, zero, label=f"T({shift:g})"
    )


class Composite(FlowMap):
    """``factors[0] o factors[1] o ... o factors[-1]``; the last factor acts first."""

    def __init__(
        self,
        factors: Sequence[FlowMap],
        label: Optional[str] = None,
        support_radius: Optional[float] = None,
    ):
        factors = list(factors)
        if not factors:
            raise UsageError("a composite needs at least one factor")
        space = factors[0].space
        for f in factors[1:]:
            if f.space != space:
                raise UsageError(f"cannot compose maps on {space} and {f.space}")
        if support_radius is None:
            support_radius = max(f.support_radius for f in factors)
        label = label or " o ".join(f.label for f in factors)
        super().__init__(space, support_radius, label)
        self.factors: List[FlowMap] = factors

    def transport(self, coords: np.ndarray) -> MapResult:
        X = self.space.check_coords(coords)
        travel = np.zeros(X.shape[0])
        log_conformal = np.zeros(X.shape[0])
        for f in reversed(self.factors):
            step = f.transport(X)
            X = step.image
            travel += step.travel
            log_conformal += step.log_conformal
        return MapResult(X, travel, log_conformal)

    def inverse(self) -> "Composite":
        return Composite(
            [f.inverse() for f in reversed(self.factors)],
            label=f"({self.label})^-1",
            support_radius=self.support_radius,
        )


def compose(*maps: FlowMap) -> Composite:
    """``compose(f, g, h) = f o g o h``."""
    flat: List[FlowMap] = []
    for m in maps:
        flat.extend(m.factors if isinstance(m, Composite) else [m])
    return Composite(flat)


def image_support_bound(
    h: FlowMap, radius: float, samples: int = 256, seed: int = 0
) -> float:
    """Bound on ``max |h(p)|`` over the ball ``B(radius)`` in support coordinates.

    ``h(B)`` is bounded by ``h(S)``, so the sphere is sampled and padded by
    the largest sampling gap times the largest nearest-neighbour stretch.
    Never exceeds the bound ``max(radius, support(h))`` that holds for any
    compactly supported ``h``.
    """
    if not math.isfinite(radius):
        return math.inf
    trivial = max(radius, h.support_radius)
    if radius == 0.0:
        return 0.0
    space = h.space
    m = space.support_dimension
    rng = np.random.default_rng(seed)
    directions = rng.normal(size=(samples, m))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    X = np.zeros((samples, space.dimension))
    X[:, :m] = radius * directions
    if space.wraps:
        X[:, space.z_index] = rng.uniform(0.0, 1.0, size=samples)
    image = space.support_coords(h.apply(X))
    norms = np.linalg.norm(image, axis=1)
    source = X[:, :m]
    pairwise = np.linalg.norm(source[:, None, :] - source[None, :, :], axis=2)
    np.fill_diagonal(pairwise, np.inf)
    nearest = np.argmin(pairwise, axis=1)
    gaps = pairwise[np.arange(samples), nearest]
    stretch = np.linalg.norm(image - image[nearest], axis=1) / gaps
    pad = max(1.0, float(np.max(stretch))) * float(np.max(gaps))
    return float(min(trivial, np.max(norms) + pad))


def conjugate(f: FlowMap, h: FlowMap) -> Composite:
    """``h o f o h^{-1}``, supported in ``h(supp f)``."""
    if f.space != h.space:
        raise UsageError(f"cannot conjugate a map on {f.space} by one on {h.space}")
    support = image_support_bound(h, f.support_radius)
    return Composite(
        [h, f, h.inverse()],
        label=f"{h.label} o {f.label} o {h.label}^-1",
        support_radius=support,
    )
