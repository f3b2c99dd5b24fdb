"""Lift endpoint experiment.

The extreme actions of a lift are the extreme values of ``H``.
"""

import logging
from typing import Any, Dict, List, Tuple

import numpy as np

from ..geometry.spaces import Space
from ..hamiltonians.families import hessian_bound, radial_profile, rotation_plateau
from ..hamiltonians.fields import ScalarField, constant
from ..lifts.fixed_points import base_spectrum
from ..lifts.hamiltonian_flow import HamiltonianFlow
from ..lifts.lift import lift
from ..orchestrator.base import VerificationExperiment
from ..orchestrator.context import ExperimentContext
from ..spectrum.translated_points import spectrum
from ..utils.grids import box_grid

logger = logging.getLogger(__name__)

ENDPOINT_TOL = 1e-4
HESSIAN_LIMIT = 1.0


def endpoint_families(n: int = 1) -> List[Tuple[str, ScalarField]]:
    """Autonomous Hamiltonians with ``max |Hess H| <= HESSIAN_LIMIT``.

    One family changes sign and one is a plateau.

    The Hessian of ``radial_profile(a, R)`` peaks near ``29.6 |a| / R^2``.
    """
    base = Space.symplectic_base(n)
    m = base.dimension
    left = np.zeros(m)
    left[0] = -1.8
    right = np.zeros(m)
    right[0] = 1.8
    return [
        ("radial_0.15", radial_profile(0.15, 2.5, base)),
        ("radial_0.1", radial_profile(0.1, 2.0, base)),
        ("radial_-0.15", radial_profile(-0.15, 2.5, base)),
        (
            "sign_changing",
            radial_profile(0.05, 1.5, base, left)
            + radial_profile(-0.03, 1.5, base, right),
        ),
        ("plateau_0.1", rotation_plateau(0.1, 0.4, 1.8, base)),
    ]


def extreme_values(H: ScalarField, points_per_axis: int = 161) -> Tuple[float, float]:
    """Min and max of ``H`` over a grid covering its support (zero outside)."""
    radius = H.support_radius
    m = H.space.dimension
    ppa = points_per_axis if m <= 2 else 21
    values = H.value(0.0, box_grid(-radius * np.ones(m), radius * np.ones(m), ppa))
    return float(min(0.0, np.min(values))), float(max(0.0, np.max(values)))


class LiftEndpointsExperiment(VerificationExperiment):
    name = "lift-endpoints"
    anchor = "lift-spectral-endpoints: c-(lift) = min H, c+(lift) = max H"
    claim = (
        "For C^2-small autonomous compactly supported H, the least and greatest "
        "translated-point actions of the lift equal min H and max H."
    )
    description = "Translated-point action extrema of lifts against min/max of H"

    def compute(self, context: ExperimentContext) -> Dict[str, Any]:
        tolerance = context.tolerance()
        planar = context.n == 1
        ppa = int(context.param("points_per_axis", 31 if planar else 7))
        circle_points = int(context.param("circle_points", 16 if planar else 4))
        measurements = []
        series: List[Dict[str, Any]] = []
        hessians: Dict[str, float] = {}

        for label, H in endpoint_families(context.n):
            flow = HamiltonianFlow(H, 1.0, tolerance)
            lifted = lift(flow)
            spec = spectrum(lifted, points_per_axis=ppa, circle_points=circle_points)
            base = base_spectrum(flow, points_per_axis=max(ppa, 41) if planar else ppa)
            h_min, h_max = extreme_values(H)
            low = min(spec.values)
            high = max(spec.values)
            error = max(abs(low - h_min), abs(high - h_max))
            corner = H.support_radius * np.ones(H.space.dimension)
            hessian = hessian_bound(H, -corner, corner, 41 if planar else 9)
            hessians[label] = hessian
            deviation = spec.deviation_from(base.values)
            measurements += [
                self.at_most(f"hessian[{label}]", hessian, HESSIAN_LIMIT),
                self.at_most(f"endpoints[{label}]", error, ENDPOINT_TOL),
                self.at_most(f"lift_vs_base[{label}]", deviation, ENDPOINT_TOL),
            ]
            series.append(
                {
                    "family": label,
                    "min_H": h_min,
                    "max_H": h_max,
                    "min_spec": low,
                    "max_spec": high,
                    "clusters": len(spec),
                    "hessian_bound": hessians[label],
                }
            )
            self._log(
                "family_done",
                f"{label}: Spec in [{low:.6f}, {high:.6f}], "
                f"H in [{h_min:.6f}, {h_max:.6f}]",
            )

        zero = constant(Space.symplectic_base(context.n), 0.0)
        zero_spec = spectrum(
            lift(HamiltonianFlow(zero, 1.0, tolerance)),
            search_region=(-np.ones(2 * context.n), np.ones(2 * context.n)),
            points_per_axis=5,
            circle_points=4,
        )
        measurements.append(self.at_most("zero_hamiltonian", zero_spec.max_abs, 1e-12))
        return {
            "params": {
                "families": [label for label, _ in endpoint_families(context.n)],
                "points_per_axis": ppa,
                "circle_points": circle_points,
                "hessian_bounds": hessians,
                "n": context.n,
            },
            "measurements": measurements,
            "series": series,
        }
