"""Translated conjugates ``f_k`` of one map.

Their C^0 norm is constant, yet each compact set is eventually left fixed.
"""

import logging
from typing import Any, Dict, List

import numpy as np

from ..flows.maps import FlowMap, conjugate, translation_map
from ..geometry.spaces import Space
from ..hamiltonians.families import rotation_plateau
from ..lifts.hamiltonian_flow import HamiltonianFlow
from ..lifts.lift import lift
from ..metrics.c0 import SampleRegion, c0_norm
from ..orchestrator.base import VerificationExperiment
from ..orchestrator.context import ExperimentContext

logger = logging.getLogger(__name__)

NORM_SPREAD_TOL = 1e-3
COMPACT_TOL = 1e-12

SUPPORT_RADIUS = 0.8
COMPACT_RADIUS = 1.0


def translated_family(
    k_list: List[float], n: int = 1, tolerance=None
) -> Dict[float, FlowMap]:
    """``f_k = T_k f_0 T_k^-1``.

    ``f_0`` is a lifted plateau rotation and ``T_k`` the translation by ``k``.
    """
    H = rotation_plateau(0.2, 0.3, SUPPORT_RADIUS, Space.symplectic_base(n))
    f0 = lift(HamiltonianFlow(H, 1.0, tolerance))
    return {
        k: f0 if k == 0 else conjugate(f0, translation_map(f0.space, k))
        for k in k_list
    }


class CoVsC0Experiment(VerificationExperiment):
    name = "co-vs-c0"
    anchor = "c0-vs-compact: constant C0 norm, uniform convergence on compacts"
    claim = (
        "The conjugates f_k of f_0 by translations by k have the same C^0 norm for "
        "all k, yet converge to the identity uniformly on every compact set."
    )
    description = (
        "C^0 norms and compact-restricted sup norms along a translated conjugate family"
    )

    def compute(self, context: ExperimentContext) -> Dict[str, Any]:
        k_list = [float(k) for k in context.param("k_list", [0, 1, 2, 4, 8])]
        mesh = context.mesh or float(context.param("mesh", 0.05))
        tolerance = context.tolerance()
        space = Space.prequantized(context.n)
        family = translated_family(k_list, context.n, tolerance)
        K = SampleRegion.around(space, COMPACT_RADIUS, inflate=0.0)

        measurements = []
        series: List[Dict[str, Any]] = []
        norms = {}
        for k, f in family.items():
            shift = np.zeros(space.support_dimension)
            shift[0] = k
            around_support = SampleRegion.around(
                space, COMPACT_RADIUS, center=shift, inflate=0.0
            )
            norm = c0_norm(f, around_support, mesh, certify=False)
            on_K = c0_norm(f, K, mesh, certify=False, check_leakage=False)
            norms[k] = norm.lower
            series.append({"k": k, "norm": norm.lower, "compact_sup": on_K.lower})
            if k - COMPACT_RADIUS > SUPPORT_RADIUS:
                measurements.append(
                    self.at_most(f"compact_sup[k={k:g}]", on_K.lower, COMPACT_TOL)
                )
            if k == 0:
                gap = abs(norm.lower - on_K.lower)
                measurements.append(self.at_most("coincide_at_zero", gap, COMPACT_TOL))
            self._log(
                "k_done",
                f"k={k:g}: ||f_k|| ~ {norm.lower:.6f}, sup on K {on_K.lower:.3e}",
            )

        spread = max(norms.values()) - min(norms.values())
        measurements.insert(0, self.at_most("norm_spread", spread, NORM_SPREAD_TOL))
        return {
            "params": {
                "k_list": k_list,
                "mesh": mesh,
                "compact_radius": COMPACT_RADIUS,
                "n": context.n,
            },
            "measurements": measurements,
            "series": series,
        }
