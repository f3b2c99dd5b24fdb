"""Batched damped Newton iteration and the seed-then-refine root search."""

import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..config import get_settings

logger = logging.getLogger(__name__)

ResidualFn = Callable[[np.ndarray], np.ndarray]
WrapFn = Callable[[np.ndarray], np.ndarray]

_DAMPING = np.array([1.0, 0.5, 0.25, 0.125, 0.0625])


@dataclass
class NewtonResult:
    roots: np.ndarray
    residuals: np.ndarray
    converged: np.ndarray
    iterations: int

    @property
    def n_converged(self) -> int:
        return int(np.sum(self.converged))


def damped_newton(
    residual_fn: ResidualFn,
    seeds: np.ndarray,
    tol: float,
    max_iter: Optional[int] = None,
    step: Optional[float] = None,
    wrap: Optional[WrapFn] = None,
) -> NewtonResult:
    """Refine all ``seeds`` at once.

    The Jacobian comes from forward differences; the update is the
    least-squares (pseudo-inverse) step, so degenerate directions such as a
    circle of equivalent roots do not stall the iteration. Each step is
    damped to the best of a short backtracking ladder and a seed is dropped
    once no damping reduces its residual.
    """
    settings = get_settings()
    max_iter = settings.newton_max_iter if max_iter is None else max_iter
    step = settings.newton_step if step is None else step
    wrap = wrap or (lambda X: X)

    X = np.array(seeds, dtype=float)
    if X.shape[0] == 0:
        return NewtonResult(X, np.zeros(0), np.zeros(0, dtype=bool), 0)
    M, d = X.shape
    R = residual_fn(X)
    norms = np.linalg.norm(R, axis=1)
    converged = norms < tol
    failed = ~np.isfinite(norms)
    iterations = 0
    for iterations in range(1, max_iter + 1):
        idx = np.flatnonzero(~converged & ~failed)
        if idx.size == 0:
            break
        Xa, Ra = X[idx], R[idx]
        k = Ra.shape[1]
        h = step * (1.0 + np.linalg.norm(Xa, axis=1))
        stencil = Xa[None, :, :] + h[None, :, None] * np.eye(d)[:, None, :]
        Rs = residual_fn(stencil.reshape(-1, d)).reshape(d, idx.size, k)
        J = np.transpose((Rs - Ra[None]) / h[None, :, None], (1, 2, 0))
        delta = -np.einsum("mdk,mk->md", np.linalg.pinv(J, rcond=1e-10), Ra)
        trial = Xa[None] + _DAMPING[:, None, None] * delta[None]
        candidates = wrap(trial.reshape(-1, d))
        Rc = residual_fn(candidates).reshape(len(_DAMPING), idx.size, k)
        nc = np.linalg.norm(Rc, axis=2)
        nc[~np.isfinite(nc)] = np.inf
        best = np.argmin(nc, axis=0)
        best_norm = nc[best, np.arange(idx.size)]
        improved = best_norm < norms[idx]
        take = idx[improved]
        rows = (best[improved], np.flatnonzero(improved))
        X[take] = candidates.reshape(len(_DAMPING), idx.size, d)[rows]
        R[take] = Rc[rows]
        norms[take] = best_norm[improved]
        failed[idx[~improved]] = True
        converged = norms < tol
    n_failed = int(np.sum(~converged))
    if n_failed:
        logger.debug(
            f"Newton: {n_failed} of {M} seeds did not converge "
            f"within {iterations} iterations"
        )
    return NewtonResult(X, norms, converged, iterations)


@dataclass
class RootSearch:
    """Outcome of seeding a grid and refining the promising seeds."""

    roots: np.ndarray
    residuals: np.ndarray
    n_seeds: int
    n_accepted: int
    n_refined: int
    n_diverged: int


def search_roots(
    residual_fn: ResidualFn,
    seeds: np.ndarray,
    tol: float,
    refine_threshold: float,
    wrap: Optional[WrapFn] = None,
) -> RootSearch:
    """Keep seeds below ``tol``; run Newton from those below ``refine_threshold``."""
    R = residual_fn(seeds)
    norms = np.linalg.norm(R, axis=1)
    accepted = norms < tol
    promising = ~accepted & (norms < refine_threshold)
    result = damped_newton(residual_fn, seeds[promising], tol, wrap=wrap)
    roots = np.vstack([seeds[accepted], result.roots[result.converged]])
    residuals = np.concatenate([norms[accepted], result.residuals[result.converged]])
    n_diverged = int(np.sum(~result.converged))
    if n_diverged:
        logger.info(
            f"{n_diverged} of {int(np.sum(promising))} refined seeds did not converge"
        )
    return RootSearch(
        roots=roots,
        residuals=residuals,
        n_seeds=seeds.shape[0],
        n_accepted=int(np.sum(accepted)),
        n_refined=result.n_converged,
        n_diverged=n_diverged,
    )
