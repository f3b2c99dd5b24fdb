"""Change of primitive: the basis change pulls ``alpha0'`` back to ``alpha0``.

It also keeps ``B(r) x S^1`` in place.
"""

import logging
from typing import Any, Dict, List

import numpy as np

from ..constructions.basis_change import basis_change_map
from ..flows.pullback import pullback_defects
from ..geometry.forms import OneForm
from ..geometry.spaces import Space
from ..orchestrator.base import VerificationExperiment
from ..orchestrator.context import ExperimentContext
from ..utils.grids import ball_samples

logger = logging.getLogger(__name__)

RESIDUAL_TOL = 1e-6
RADIUS_TOL = 1e-12


class BasisChangeExperiment(VerificationExperiment):
    name = "basis-change"
    anchor = "primitive-change: pullback of alpha0' is alpha0"
    claim = (
        "The map (x, y, z) -> ((x - y)/sqrt2, (x + y)/sqrt2, z - <x, y>/2) "
        "pulls alpha0' back to alpha0 and preserves |q|."
    )
    description = "Pullback residual, conformal factor and radii of the basis change"

    def compute(self, context: ExperimentContext) -> Dict[str, Any]:
        count = int(context.param("samples", 1000))
        radius = float(context.param("radius", 2.0))
        rng = context.rng(6)
        measurements = []
        series: List[Dict[str, Any]] = []
        for space in (Space.prequantized(context.n), Space.euclidean(context.n)):
            f = basis_change_map(space)
            X = np.zeros((count, space.dimension))
            m = 2 * space.n
            X[:, :m] = ball_samples(rng, count, m, radius)
            X[:, space.z_index] = rng.uniform(0.0, 1.0, count)
            defects = pullback_defects(
                f, OneForm.alpha0_prime(space), X, reference=OneForm.alpha0(space)
            )
            residual = max(d.residual for d in defects)
            conformal = max(abs(d.conformal - 1.0) for d in defects)
            image = f.apply(X)
            before = np.linalg.norm(X[:, :m], axis=1)
            after = np.linalg.norm(image[:, :m], axis=1)
            radius_change = float(np.max(np.abs(after - before)))
            label = space.kind.value
            measurements += [
                self.at_most(f"residual[{label}]", residual, RESIDUAL_TOL),
                self.at_most(f"conformal[{label}]", conformal, RESIDUAL_TOL),
                self.at_most(f"radius[{label}]", radius_change, RADIUS_TOL),
            ]
            series.append(
                {
                    "space": label,
                    "residual": residual,
                    "conformal": conformal,
                    "radius_change": radius_change,
                }
            )
        return {
            "params": {"samples": count, "radius": radius, "n": context.n},
            "measurements": measurements,
            "series": series,
        }
