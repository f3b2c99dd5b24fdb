"""Contactomorphism certificate.

Every constructed map pulls the contact form back to a multiple of itself.
"""

import logging
import math
from typing import Any, Dict, List, Tuple

import numpy as np

from ..constructions.squeeze import squeeze
from ..constructions.translations import cutoff_translation, reeb_push
from ..flows.maps import FlowMap
from ..flows.pullback import pullback_defects
from ..geometry.forms import standard_form
from ..geometry.spaces import Space
from ..hamiltonians.families import radial_profile
from ..lifts.hamiltonian_flow import HamiltonianFlow
from ..lifts.lift import lift
from ..orchestrator.base import VerificationExperiment
from ..orchestrator.context import ExperimentContext
from ..utils.grids import ball_samples
from .random_maps import random_contact_flow, random_lift

logger = logging.getLogger(__name__)

RESIDUAL_TOL = 1e-4
CONFORMAL_TOL = 1e-4
TINY = float(np.finfo(float).tiny)


def sample_support(rng: np.random.Generator, f: FlowMap, count: int) -> np.ndarray:
    """Uniform points of a ball slightly larger than the support.

    On the prequantized space the circle coordinate is uniform as well.
    """
    space = f.space
    radius = 1.05 * f.support_radius if math.isfinite(f.support_radius) else 3.0
    m = space.support_dimension
    X = np.zeros((count, space.dimension))
    X[:, :m] = ball_samples(rng, count, m, max(radius, 0.1))
    if space.wraps:
        X[:, space.z_index] = rng.uniform(0.0, 1.0, count)
    return X


def _push_box(space: Space) -> Tuple[np.ndarray, np.ndarray]:
    m = space.support_dimension
    return -0.3 * np.ones(m), 0.3 * np.ones(m)


def certificate_maps(
    rng: np.random.Generator, n: int = 1, tolerance=None
) -> List[Tuple[str, FlowMap]]:
    euclidean = Space.euclidean(n)
    prequantized = Space.prequantized(n)
    base = Space.symplectic_base(n)
    window = (-0.6, 0.6)
    radial = HamiltonianFlow(radial_profile(0.3, 1.0, base), 1.0, tolerance)
    return [
        ("squeeze", squeeze(0.5, 1.0, 2.0, n, tolerance).map),
        ("translation", cutoff_translation(1.0, 0.5, 2.5, euclidean, tolerance)),
        (
            "reeb_push",
            reeb_push(0.4, _push_box(euclidean), window, euclidean, tolerance),
        ),
        (
            "reeb_push_prequantized",
            reeb_push(0.4, _push_box(prequantized), window, prequantized, tolerance),
        ),
        ("lift", lift(radial)),
        ("random_lift", random_lift(rng, n, tolerance).map),
        (
            "random_flow_prequantized",
            random_contact_flow(rng, prequantized, tolerance=tolerance).map,
        ),
        (
            "random_flow_euclidean",
            random_contact_flow(rng, euclidean, tolerance=tolerance).map,
        ),
    ]


class ContactCertificateExperiment(VerificationExperiment):
    name = "contact-certificate"
    anchor = "contactomorphism-certificate: f^* alpha = e^g alpha"
    claim = (
        "Every constructed map f satisfies f^* alpha = e^g alpha: pullback residual "
        "below 1e-4 on sampled points."
    )
    description = (
        "Finite-difference pullback residuals of squeezes, translations, "
        "Reeb pushes, lifts and random flows"
    )

    def compute(self, context: ExperimentContext) -> Dict[str, Any]:
        count = int(context.param("samples", 1000))
        tolerance = context.tolerance()
        rng = context.rng(3)
        measurements = []
        series: List[Dict[str, Any]] = []
        maps = certificate_maps(rng, context.n, tolerance)
        for label, f in maps:
            X = sample_support(rng, f, count)
            defects = pullback_defects(f, standard_form(f.space), X)
            residual = max(d.residual for d in defects)
            min_conformal = min(d.conformal for d in defects)
            measurements.append(
                self.below(f"residual[{label}]", residual, RESIDUAL_TOL)
            )
            measurements.append(
                self.at_least(f"min_conformal[{label}]", min_conformal, TINY)
            )
            series.append(
                {
                    "map": label,
                    "max_residual": residual,
                    "min_conformal": min_conformal,
                    "samples": count,
                }
            )
            self._log("map_done", f"{label}: residual {residual:.2e}")

        a = 0.5
        squeezed = maps[0][1]
        inner = ball_samples(rng, 200, squeezed.space.dimension, 0.9)
        defects = pullback_defects(squeezed, standard_form(squeezed.space), inner)
        conformal = np.array([d.conformal for d in defects])
        spread = float(np.max(np.abs(conformal - a * a)))
        measurements.append(self.at_most("squeeze_conformal", spread, CONFORMAL_TOL))
        return {
            "params": {
                "samples": count,
                "maps": [label for label, _ in maps],
                "n": context.n,
            },
            "measurements": measurements,
            "series": series,
        }
