"""Spectrum bound experiment: translated-point actions are bounded by the C^0 norm."""

import logging
from typing import Any, Dict, List

import numpy as np

from ..errors import SupportLeakageError
from ..flows.maps import identity_map
from ..geometry.spaces import Space
from ..metrics.c0 import SampleRegion, displacement_estimates
from ..orchestrator.base import VerificationExperiment
from ..orchestrator.context import ExperimentContext
from ..spectrum.translated_points import spectrum
from .random_maps import random_small_map

logger = logging.getLogger(__name__)

SLACK = 1e-4


class SpectrumBoundExperiment(VerificationExperiment):
    """Compares spectra of random C^0-small contactomorphisms with their norms."""

    name = "spectrum-bound"
    anchor = "spectrum-containment: Spec(phi) lies in [-|phi|_C0, |phi|_C0]"
    claim = (
        "For contactomorphisms of the prequantized space with projection distance "
        "below 1/2, every translated-point action is bounded in absolute value by "
        "the C^0 norm and by the projection distance."
    )
    description = "max|Spec| of random small maps against sampled sup norms"

    def compute(self, context: ExperimentContext) -> Dict[str, Any]:
        samples = int(context.param("samples", 100))
        mesh = context.mesh or float(context.param("mesh", 0.05))
        ppa = int(context.param("points_per_axis", 15))
        circle_points = int(context.param("circle_points", 8))
        rng = context.rng(1)
        tolerance = context.tolerance()

        series: List[Dict[str, Any]] = []
        skipped = 0
        worst_c0 = -np.inf
        worst_projection = -np.inf
        for k in range(samples):
            sample = random_small_map(rng, context.n, tolerance)
            phi = sample.map
            region = SampleRegion.around(phi.space, phi.support_radius, inflate=0.1)
            try:
                c0, projection = displacement_estimates(phi, None, region, mesh)
            except SupportLeakageError as e:
                logger.warning(f"Sample {k} ({sample.kind}) skipped: {e.message}")
                skipped += 1
                continue
            if projection.upper >= 0.5:
                skipped += 1
                continue
            spec = spectrum(phi, points_per_axis=ppa, circle_points=circle_points)
            c0_margin = spec.max_abs - c0.upper
            projection_margin = spec.max_abs - projection.upper
            worst_c0 = max(worst_c0, c0_margin)
            worst_projection = max(worst_projection, projection_margin)
            series.append(
                {
                    "sample": k,
                    "kind": sample.kind,
                    "max_abs_spectrum": spec.max_abs,
                    "clusters": len(spec),
                    "c0_lower": c0.lower,
                    "c0_upper": c0.upper,
                    "projection_lower": projection.lower,
                    "projection_upper": projection.upper,
                }
            )
            if (k + 1) % 10 == 0:
                logger.info(
                    f"spectrum-bound: {k + 1}/{samples} samples, "
                    f"worst C^0 margin {worst_c0:.3e}"
                )

        unit = np.ones(2 * context.n)
        identity = spectrum(
            identity_map(Space.prequantized(context.n)),
            search_region=(-unit, unit),
            points_per_axis=5,
            circle_points=4,
        )
        if not series:
            worst_c0 = worst_projection = 0.0
        measurements = [
            self.at_most("c0_margin", worst_c0, SLACK),
            self.at_most("projection_margin", worst_projection, SLACK),
            self.at_most("identity_spectrum", identity.max_abs, 0.0),
            self.at_least("evaluated_samples", len(series), 1),
        ]
        return {
            "params": {
                "samples": samples,
                "evaluated": len(series),
                "skipped": skipped,
                "mesh": mesh,
                "points_per_axis": ppa,
                "circle_points": circle_points,
                "n": context.n,
            },
            "measurements": measurements,
            "series": series,
        }
