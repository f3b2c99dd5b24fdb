"""Rational rotation experiment.

Conjugates of a ``1/m`` plateau lift stay ``1/m`` away from the identity.
"""

import logging
from typing import Any, Dict, List

import numpy as np

from ..constructions.translations import reeb_push
from ..flows.maps import FlowMap, conjugate
from ..geometry.spaces import Space
from ..hamiltonians.families import rotation_plateau
from ..lifts.hamiltonian_flow import HamiltonianFlow
from ..lifts.lift import lift
from ..metrics.c0 import sampled_distance
from ..orchestrator.base import VerificationExperiment
from ..orchestrator.context import ExperimentContext
from ..utils.grids import box_grid, circle_grid, with_circle
from .random_maps import random_conjugator

logger = logging.getLogger(__name__)

BOUND_SLACK = 1e-3
DISJOINT_TOL = 1e-9

PLATEAU_RADIUS = 0.3
SUPPORT_RADIUS = 0.9


def plateau_lift(m: int, n: int = 1, tolerance=None) -> FlowMap:
    """Lift of the plateau Hamiltonian of height ``1/m``.

    It rotates the plateau tube by ``1/m``.
    """
    base = Space.symplectic_base(n)
    H = rotation_plateau(1.0 / m, PLATEAU_RADIUS, SUPPORT_RADIUS, base)
    return lift(HamiltonianFlow(H, 1.0, tolerance))


def plateau_samples(
    m: int, n: int = 1, points_per_axis: int = 7, orbit_points: int = 4
) -> np.ndarray:
    """Points of the plateau tube; the circle grid is a union of full ``1/m``-orbits."""
    inner = 0.25
    corner = inner * np.ones(2 * n)
    base = box_grid(-corner, corner, points_per_axis if n == 1 else 3)
    base = base[np.linalg.norm(base, axis=1) <= inner]
    return with_circle(base, circle_grid(orbit_points * m))


def disjoint_conjugator(n: int = 1, tolerance=None) -> FlowMap:
    """A Reeb push supported near ``(3, 0, ...)``, away from the plateau tube."""
    space = Space.prequantized(n)
    m = space.support_dimension
    lower = -0.3 * np.ones(m)
    upper = 0.3 * np.ones(m)
    lower[0] += 3.0
    upper[0] += 3.0
    return reeb_push(0.3, (lower, upper), (2.5, 3.5), space, tolerance, margin=0.1)


class RationalRotationExperiment(VerificationExperiment):
    name = "rational-rotation"
    anchor = "rational-rotation: |psi phi psi^-1|_C0 >= 1/m"
    claim = (
        "If H = 1/m on a ball, every conjugate psi phi psi^-1 of the lift phi by a "
        "compactly supported contactomorphism psi has C^0 norm at least 1/m."
    )
    description = "Lower sup estimates of conjugates of a rational plateau rotation"

    def compute(self, context: ExperimentContext) -> Dict[str, Any]:
        m = int(context.param("m", 5))
        count = int(context.param("conjugator_samples", 50))
        tolerance = context.tolerance()
        rng = context.rng(2)
        bound = 1.0 / m - BOUND_SLACK

        phi = plateau_lift(m, context.n, tolerance)
        X = plateau_samples(m, context.n)
        identity_lower = sampled_distance(phi, None, X).lower
        far = conjugate(phi, disjoint_conjugator(context.n, tolerance))
        disjoint_lower = sampled_distance(far, None, X).lower

        series: List[Dict[str, Any]] = []
        lowers = []
        for k in range(count):
            psi = random_conjugator(rng, context.n, tolerance)
            conj = conjugate(phi, psi.map)
            lower = sampled_distance(conj, None, psi.map.apply(X)).lower
            lowers.append(lower)
            series.append({"sample": k, "shift": psi.params["shift"], "lower": lower})
            if lower < bound:
                logger.warning(
                    f"Conjugator {k} gives lower estimate {lower:.6f} below 1/m"
                )
        min_lower = min(lowers) if lowers else identity_lower
        self._log(
            "conjugators_done",
            f"{count} conjugators, min lower estimate {min_lower:.6f}",
        )
        disjoint_change = abs(disjoint_lower - identity_lower)
        return {
            "params": {
                "m": m,
                "conjugator_samples": count,
                "samples_per_map": int(X.shape[0]),
                "n": context.n,
            },
            "measurements": [
                self.at_least("identity_lower", identity_lower, bound),
                self.at_most("disjoint_change", disjoint_change, DISJOINT_TOL),
                self.at_least("min_random_lower", min_lower, bound),
            ],
            "series": series,
        }
