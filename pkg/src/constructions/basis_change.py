"""Strict contactomorphism taking ``alpha0`` to the rotation-invariant ``alpha0'``."""

import math

import numpy as np

from ..errors import UsageError
from ..flows.maps import ExplicitMap
from ..geometry.spaces import Point, Space, SpaceKind

_SQRT2 = math.sqrt(2.0)


def _forward(n: int):
    def fn(X: np.ndarray) -> np.ndarray:
        x = X[:, :n]
        y = X[:, n : 2 * n]
        out = np.empty_like(X)
        out[:, :n] = (x - y) / _SQRT2
        out[:, n : 2 * n] = (x + y) / _SQRT2
        out[:, 2 * n] = X[:, 2 * n] - 0.5 * np.sum(x * y, axis=1)
        return out

    return fn


def _backward(n: int):
    def fn(X: np.ndarray) -> np.ndarray:
        u = X[:, :n]
        v = X[:, n : 2 * n]
        x = (u + v) / _SQRT2
        y = (v - u) / _SQRT2
        out = np.empty_like(X)
        out[:, :n] = x
        out[:, n : 2 * n] = y
        out[:, 2 * n] = X[:, 2 * n] + 0.5 * np.sum(x * y, axis=1)
        return out

    return fn


def basis_change_map(space: Space) -> ExplicitMap:
    """``(x, y, z) -> ((x - y)/sqrt2, (x + y)/sqrt2, z - <x, y>/2)``.

    Pulls ``alpha0'`` back to ``alpha0`` and preserves the base radius. On the
    prequantized space the ``z`` output is taken modulo 1.
    """
    space.require(SpaceKind.PREQUANTIZED, SpaceKind.EUCLIDEAN_CONTACT)
    n = space.n
    zi = space.z_index

    def travel(X):
        return _forward(n)(X)[:, zi] - X[:, zi]

    return ExplicitMap(
        space,
        _forward(n),
        _backward(n),
        travel_fn=travel,
        log_conformal_fn=lambda X: np.zeros(X.shape[0]),
        label="basis_change",
    )


def basis_change(p: Point) -> Point:
    """Apply the basis change to a single point."""
    if not p.space.is_contact:
        raise UsageError(f"basis change needs a contact space, got {p.space}")
    return basis_change_map(p.space)(p)
