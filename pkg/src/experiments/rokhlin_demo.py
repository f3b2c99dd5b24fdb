"""Rokhlin demo: extract one fragment of a truncated product to within ``2 eps``."""

import logging
from typing import Any, Dict, List

import numpy as np

from ..constructions.rokhlin import rokhlin_element, rokhlin_extract, family_maps
from ..flows.maps import Composite
from ..geometry.spaces import Space
from ..metrics.c0 import SampleRegion, c0_distance, sampled_distance
from ..orchestrator.base import VerificationExperiment
from ..orchestrator.context import ExperimentContext
from ..utils.grids import ball_samples

logger = logging.getLogger(__name__)

AGREEMENT_TOL = 1e-5
ORDER_TOL = 1e-6


class RokhlinDemoExperiment(VerificationExperiment):
    name = "rokhlin-demo"
    anchor = "rokhlin-approximation: C0 distance < 2 eps"
    claim = (
        "Pushing fragment i of the product g out along the Reeb direction and "
        "squeezing the rest into B(eps) gives a conjugate of g within C^0 distance "
        "2 eps of the pushed fragment."
    )
    description = (
        "C^0 distance between the extracted approximant and the pushed fragment "
        "for shrinking eps"
    )

    def compute(self, context: ExperimentContext) -> Dict[str, Any]:
        family = str(context.param("family", "squeeze"))
        N = int(context.param("N", 3))
        index = int(context.param("i", 2))
        eps_values = context.param("eps_list", [0.1, 0.05, 0.025])
        eps_list = sorted((float(e) for e in eps_values), reverse=True)
        points_per_axis = int(context.param("points_per_axis", 9))
        tolerance = context.tolerance()
        space = Space.euclidean(context.n)

        g = rokhlin_element(family_maps(family, N, space), N, tolerance)
        measurements = []
        series: List[Dict[str, Any]] = []
        distances = []
        for eps in eps_list:
            extraction = rokhlin_extract(g, index, eps, tolerance=tolerance)
            per_region = {}
            for label, (lo, hi) in extraction.regions().items():
                region = SampleRegion.box(space, lo, hi)
                width = float(np.min(np.asarray(hi) - np.asarray(lo)))
                per_region[label] = c0_distance(
                    extraction.approximant,
                    extraction.target,
                    region,
                    width / (points_per_axis - 1),
                    certify=False,
                    check_leakage=False,
                )
            distance = max(per_region.values(), key=lambda e: e.lower)
            agreement = per_region["pushed_fragment"].lower
            distances.append(distance.lower)
            measurements.append(
                self.below(f"distance[eps={eps:g}]", distance.lower, extraction.bound)
            )
            measurements.append(
                self.at_most(f"agreement[eps={eps:g}]", agreement, AGREEMENT_TOL)
            )
            series.append(
                {
                    "eps": eps,
                    "bound": extraction.bound,
                    "distance": distance.lower,
                    "shrunk_rest": per_region["shrunk_rest"].lower,
                    "agreement": agreement,
                }
            )
            self._log(
                "eps_done",
                f"eps={eps:g}: distance {distance.lower:.6f} < {extraction.bound:g}",
            )

        increments = np.diff(distances) if len(distances) > 1 else np.zeros(1)
        measurements.append(self.at_most("monotone", float(np.max(increments)), 0.0))
        order_defect = self._order_defect(g, space)
        measurements.append(self.at_most("fragment_order", order_defect, ORDER_TOL))
        return {
            "params": {
                "family": family,
                "N": N,
                "i": index,
                "eps_list": eps_list,
                "squeeze_factors": g.squeeze_factors,
                "radii": g.radii,
                "n": context.n,
            },
            "measurements": measurements,
            "series": series,
        }

    @staticmethod
    def _order_defect(g, space: Space, samples: int = 300) -> float:
        """Product of the fragments against the product in reverse order.

        Sampled on a ball around all supports.
        """
        reversed_product = Composite(list(reversed(g.fragments)), support_radius=2.0)
        rng = np.random.default_rng(7)
        X = ball_samples(rng, samples, space.dimension, 2.0)
        return sampled_distance(g.composite, reversed_product, X).lower
