"""Adaptive integration of time-dependent vector fields.

Batches of points are stacked into one state vector and advanced with
scipy's DOP853. Each state row carries the coordinates (circle coordinate
unwrapped) plus one accumulator channel holding the time integral of the
field's density: the log conformal factor for contact fields, the point
action for symplectic fields.
"""

import logging
import math
import threading
from collections import OrderedDict
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np
from scipy.integrate import solve_ivp

from ..config import get_settings
from ..errors import IntegrationError, UsageError
from ..geometry.spaces import Point, Space
from ..hamiltonians.fields import VectorField

logger = logging.getLogger(__name__)

# Dense trajectories kept per isotopy, least recently used evicted first.
TRAJECTORY_CACHE_SIZE = 64


@dataclass(frozen=True)
class Tolerance:
    """Per-component absolute and relative tolerances."""

    atol: float = 1e-10
    rtol: float = 1e-9

    def __post_init__(self):
        if self.atol <= 0 or self.rtol <= 0:
            raise UsageError("integration tolerances must be positive")

    @classmethod
    def default(cls) -> "Tolerance":
        settings = get_settings()
        return cls(atol=settings.atol, rtol=settings.rtol)

    @classmethod
    def from_atol(cls, atol: float) -> "Tolerance":
        return cls(atol=atol, rtol=10.0 * atol)

    def scaled(self, size: int) -> Tuple[float, float]:
        """Tolerances to hand to the solver for a state of ``size`` components.

        The solver controls the RMS error of the whole state vector, so the
        tolerances shrink by ``sqrt(size)`` to bound every component.
        """
        factor = math.sqrt(max(size, 1))
        return self.atol / factor, self.rtol / factor


class Isotopy:
    """The flow ``phi_t`` of ``field`` on ``[0, T]``; ``T`` may be negative."""

    def __init__(
        self, field: VectorField, T: float = 1.0, tolerance: Optional[Tolerance] = None
    ):
        if not math.isfinite(T):
            raise UsageError(f"integration time must be finite, got {T}")
        self.field = field
        self.T = float(T)
        self.tolerance = tolerance or Tolerance.default()
        self.batch_size = get_settings().batch_size
        self._trajectories: "OrderedDict[tuple, Trajectory]" = OrderedDict()
        self._trajectory_lock = threading.Lock()

    @property
    def space(self) -> Space:
        return self.field.space

    def advance(
        self, coords: np.ndarray, t_from: float, t_to: float
    ) -> Tuple[np.ndarray, np.ndarray]:
        """Integrate from ``t_from`` to ``t_to``.

        Returns the unwrapped end coordinates ``(N, d)`` and the accumulated
        density ``(N,)``. Raises ``IntegrationError`` if the solver stalls.
        """
        X = self.space.check_coords(coords)
        n_points = X.shape[0]
        if n_points == 0 or t_from == t_to:
            return X.copy(), np.zeros(n_points)
        ends = []
        accs = []
        for start in range(0, n_points, self.batch_size):
            batch = X[start : start + self.batch_size]
            end, acc = self._advance_batch(batch, t_from, t_to)
            ends.append(end)
            accs.append(acc)
        return np.vstack(ends), np.concatenate(accs)

    def _system(self, X: np.ndarray):
        """Initial stacked state and right-hand side for a batch of points."""
        n_points, d = X.shape
        width = d + 1
        y0 = np.zeros((n_points, width))
        y0[:, :d] = X

        def fun(t, state):
            S = state.reshape(n_points, width)
            V, density = self.field.rhs(t, S[:, :d])
            out = np.empty_like(S)
            out[:, :d] = V
            out[:, d] = density
            return out.ravel()

        return y0, fun

    def _advance_batch(
        self, X: np.ndarray, t_from: float, t_to: float
    ) -> Tuple[np.ndarray, np.ndarray]:
        n_points, d = X.shape
        y0, fun = self._system(X)
        atol, rtol = self.tolerance.scaled(y0.size)
        sol = solve_ivp(
            fun, (t_from, t_to), y0.ravel(), method="DOP853", atol=atol, rtol=rtol
        )
        if sol.status != 0 or not np.all(np.isfinite(sol.y[:, -1])):
            t_fail = float(sol.t[-1]) if sol.t.size else t_from
            S = sol.y[:, -1].reshape(n_points, d + 1) if sol.y.size else y0
            speeds = np.linalg.norm(self.field(t_fail, S[:, :d]), axis=1)
            worst = int(np.nanargmax(speeds)) if np.any(np.isfinite(speeds)) else 0
            logger.error(
                f"Integration of {self.field.label} failed at t={t_fail:.6g}: "
                f"{sol.message}"
            )
            raise IntegrationError(
                f"integration of {self.field.label} failed: {sol.message}",
                point=S[worst, :d],
                time=t_fail,
            )
        S = sol.y[:, -1].reshape(n_points, d + 1)
        return S[:, :d].copy(), S[:, d].copy()

    def trajectory(
        self, coords: np.ndarray, t_from: float = 0.0, t_to: Optional[float] = None
    ) -> "Trajectory":
        """Dense output over ``[t_from, t_to]`` for a small batch of points.

        Repeated calls with the same points and interval return the cached
        :class:`Trajectory` instead of integrating again.
        """
        X = self.space.check_coords(coords)
        t_to = self.T if t_to is None else float(t_to)
        key = (X.shape, X.tobytes(), float(t_from), t_to)
        with self._trajectory_lock:
            cached = self._trajectories.get(key)
            if cached is not None:
                self._trajectories.move_to_end(key)
                return cached
        traj = self._integrate_dense(X, float(t_from), t_to)
        with self._trajectory_lock:
            self._trajectories[key] = traj
            if len(self._trajectories) > TRAJECTORY_CACHE_SIZE:
                self._trajectories.popitem(last=False)
        return traj

    def _integrate_dense(
        self, X: np.ndarray, t_from: float, t_to: float
    ) -> "Trajectory":
        y0, fun = self._system(X)
        atol, rtol = self.tolerance.scaled(y0.size)
        sol = solve_ivp(
            fun,
            (t_from, t_to),
            y0.ravel(),
            method="DOP853",
            atol=atol,
            rtol=rtol,
            dense_output=True,
        )
        if sol.status != 0:
            raise IntegrationError(
                f"integration of {self.field.label} failed: {sol.message}",
                time=float(sol.t[-1]),
            )
        logger.debug(
            f"Cached dense trajectory of {self.field.label} for {X.shape[0]} points"
        )
        return Trajectory(self.space, sol.sol, X.shape[0], t_from, t_to)

    def evaluate(
        self, t: float, p: Union[Point, np.ndarray]
    ) -> Union[Point, np.ndarray]:
        """``phi_t(p)``; ``phi_0`` is the identity exactly."""
        if isinstance(p, Point):
            if p.space != self.space:
                raise UsageError(
                    f"isotopy acts on {self.space}, point lives in {p.space}"
                )
            return Point(self.space, self.evaluate(t, p.coords)[0])
        X = self.space.check_coords(p)
        if t == 0:
            return X.copy()
        return self.space.wrap(self.advance(X, 0.0, t)[0])

    def time_map(self, t: Optional[float] = None):
        """The time-``t`` map (default ``T``) as a :class:`~src.flows.maps.FlowMap`."""
        from .maps import IntegratedFlowMap

        return IntegratedFlowMap(self, 0.0, self.T if t is None else float(t))


class Trajectory:
    """Dense trajectories of one batch of points, read-only once built."""

    def __init__(self, space: Space, dense, n_points: int, t_from: float, t_to: float):
        self.space = space
        self._dense = dense
        self.n_points = n_points
        self.t_from = t_from
        self.t_to = t_to

    def state(self, t: float) -> Tuple[np.ndarray, np.ndarray]:
        """Unwrapped coordinates and accumulator at time ``t``."""
        lo, hi = sorted((self.t_from, self.t_to))
        if not lo - 1e-12 <= t <= hi + 1e-12:
            raise UsageError(f"time {t} outside the integrated interval [{lo}, {hi}]")
        S = self._dense(t).reshape(self.n_points, -1)
        return S[:, :-1], S[:, -1]

    def positions(self, t: float) -> np.ndarray:
        return self.space.wrap(self.state(t)[0])


def integrate(
    field: VectorField, T: float = 1.0, tolerance: Optional[Tolerance] = None
) -> Isotopy:
    """Set up the isotopy generated by ``field`` on ``[0, T]``."""
    return Isotopy(field, T, tolerance)
