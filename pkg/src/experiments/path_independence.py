"""Path independence of translated-point actions.

The action of a translated point does not depend on the generating isotopy.
"""

import logging
from typing import Any, Dict, List

import numpy as np

from ..flows.isotopy import Isotopy
from ..flows.pullback import path_action_along
from ..geometry.spaces import Space
from ..hamiltonians.families import random_contact_hamiltonian
from ..hamiltonians.fields import ScalarField, contact_vector_field
from ..lifts.lift import lifted_hamiltonian
from ..orchestrator.base import VerificationExperiment
from ..orchestrator.context import ExperimentContext
from ..spectrum.translated_points import find_translated_points
from .random_maps import random_base_hamiltonian

logger = logging.getLogger(__name__)

ACTION_TOL = 1e-5
MAX_WITNESSES = 8
LOOP_TIME = 0.5


def reparametrized_travel(
    K: ScalarField, coords: np.ndarray, tolerance=None
) -> np.ndarray:
    """Travel along ``t -> phi_{t^2}``."""
    field = contact_vector_field(
        K.reparametrized(lambda t: t * t, lambda t: 2.0 * t)
    )
    return Isotopy(field, 1.0, tolerance).time_map().transport(coords).travel


def loop_composed_travel(
    K: ScalarField,
    loop: ScalarField,
    coords: np.ndarray,
    times: np.ndarray,
    tolerance=None,
) -> np.ndarray:
    """Travel along ``t -> phi_t(L_{c sin(pi t)}(z))``, ``L`` the flow of ``loop``.

    ``t -> phi_t o L_{c sin(pi t)}`` is homotopic to ``t -> phi_t`` with fixed
    endpoints, so the travel must agree with the direct one.
    """
    phi = Isotopy(contact_vector_field(K), 1.0, tolerance)
    L = Isotopy(contact_vector_field(loop), LOOP_TIME, tolerance)

    def path(t: float) -> np.ndarray:
        looped, _ = L.advance(coords, 0.0, LOOP_TIME * np.sin(np.pi * t))
        moved, _ = phi.advance(looped, 0.0, t)
        return moved

    return path_action_along(path, times)


class PathIndependenceExperiment(VerificationExperiment):
    name = "path-independence"
    anchor = (
        "action-path-independence: "
        "translated-point action is independent of the path"
    )
    claim = (
        "The action of a translated point, the travel of z along the circle under "
        "a generating isotopy, is the same for homotopic isotopies ending at phi."
    )
    description = (
        "Translated-point actions along reparametrized and loop-composed isotopies"
    )

    def compute(self, context: ExperimentContext) -> Dict[str, Any]:
        count = int(context.param("maps", 10))
        ppa = int(context.param("points_per_axis", 11 if context.n == 1 else 5))
        circle_points = int(context.param("circle_points", 6))
        times = np.linspace(0.0, 1.0, int(context.param("path_samples", 33)))
        tolerance = context.tolerance()
        space = Space.prequantized(context.n)
        rng = context.rng(5)

        worst_reparam = 0.0
        worst_loop = 0.0
        series: List[Dict[str, Any]] = []
        for k in range(count):
            if k % 2 == 0:
                n_terms = int(rng.integers(1, 4))
                K = random_contact_hamiltonian(
                    rng, space, n_terms=n_terms, amplitude=0.08
                )
            else:
                K = lifted_hamiltonian(random_base_hamiltonian(rng, context.n))
            loop = random_contact_hamiltonian(rng, space, n_terms=2, amplitude=0.05)
            phi = Isotopy(contact_vector_field(K), 1.0, tolerance).time_map()
            witnesses = find_translated_points(
                phi, points_per_axis=ppa, circle_points=circle_points
            )
            if not witnesses:
                logger.warning(
                    f"Map {k} ({K.label}) has no translated points in the search grid"
                )
                continue
            chosen = witnesses[:MAX_WITNESSES]
            W = np.array([w.point.coords for w in chosen])
            direct = np.array([w.action for w in chosen])
            reparam = reparametrized_travel(K, W, tolerance)
            looped = loop_composed_travel(K, loop, W, times, tolerance)
            d_reparam = float(np.max(np.abs(reparam - direct)))
            d_loop = float(np.max(np.abs(looped - direct)))
            worst_reparam = max(worst_reparam, d_reparam)
            worst_loop = max(worst_loop, d_loop)
            series.append(
                {
                    "map": k,
                    "generator": K.label,
                    "witnesses": len(chosen),
                    "reparametrized": d_reparam,
                    "loop_composed": d_loop,
                }
            )
            self._log(
                "map_done",
                f"map {k}: {len(chosen)} witnesses, "
                f"deviations {d_reparam:.2e}, {d_loop:.2e}",
            )
        return {
            "params": {
                "maps": count,
                "points_per_axis": ppa,
                "circle_points": circle_points,
                "path_samples": len(times),
                "n": context.n,
            },
            "measurements": [
                self.at_most("reparametrized", worst_reparam, ACTION_TOL),
                self.at_most("loop_composed", worst_loop, ACTION_TOL),
                self.at_least("maps_with_witnesses", len(series), 1),
            ],
            "series": series,
        }
