"""Squeeze formula: ``(ax, ay, a^2 z)`` on ``B(r)``, the identity outside ``B(R)``."""

import logging
from typing import Any, Dict, List

import numpy as np

from ..constructions.squeeze import IDENTITY_TOL, SCALING_TOL, scaling, squeeze
from ..geometry.spaces import Space
from ..orchestrator.base import VerificationExperiment
from ..orchestrator.context import ExperimentContext
from ..utils.grids import ball_samples

logger = logging.getLogger(__name__)


class SqueezeFormulaExperiment(VerificationExperiment):
    name = "squeeze-formula"
    anchor = "squeezing-formula: Psi_a(x, y, z) = (a x, a y, a^2 z)"
    claim = (
        "The squeeze is the contact scaling (ax, ay, a^2 z) on B(r) "
        "and the identity outside B(R)."
    )
    description = "Fresh-sample sweeps of squeezes for several factors"

    def compute(self, context: ExperimentContext) -> Dict[str, Any]:
        factors = [float(a) for a in context.param("a_list", [1.0, 0.5, 0.1])]
        r = float(context.param("r", 1.0))
        R = float(context.param("R", 2.0))
        count = int(context.param("samples", 1000))
        tolerance = context.tolerance()
        space = Space.euclidean(context.n)
        rng = context.rng(4)

        measurements = []
        series: List[Dict[str, Any]] = []
        for a in factors:
            built = squeeze(a, r, R, context.n, tolerance)
            inside = ball_samples(rng, count, space.dimension, r)
            outside = ball_samples(rng, count, space.dimension, R + 1.0, inner_radius=R)
            f = built.map
            scaled = scaling(space, a, inside)
            scaling_error = float(
                np.max(np.linalg.norm(f.apply(inside) - scaled, axis=1))
            )
            identity_error = float(
                np.max(np.linalg.norm(f.apply(outside) - outside, axis=1))
            )
            measurements += [
                self.below(f"scaling_error[a={a:g}]", scaling_error, SCALING_TOL),
                self.below(f"identity_error[a={a:g}]", identity_error, IDENTITY_TOL),
            ]
            series.append(
                {
                    "a": a,
                    "margin": built.margin,
                    "scaling_error": scaling_error,
                    "identity_error": identity_error,
                }
            )
        return {
            "params": {
                "a_list": factors,
                "r": r,
                "R": R,
                "samples": count,
                "n": context.n,
            },
            "measurements": measurements,
            "series": series,
        }
