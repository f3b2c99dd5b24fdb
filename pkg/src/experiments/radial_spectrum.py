"""Radial spectrum experiment: a radial profile flow has spectrum ``{0, a t}``."""

import logging
from typing import Any, Dict, List

from ..geometry.spaces import Space
from ..hamiltonians.families import radial_profile
from ..lifts.fixed_points import base_spectrum
from ..lifts.hamiltonian_flow import HamiltonianFlow
from ..orchestrator.base import VerificationExperiment
from ..orchestrator.context import ExperimentContext

logger = logging.getLogger(__name__)

SPECTRUM_TOL = 1e-3


def expected_radial_spectrum(a: float, t: float) -> List[float]:
    return [0.0] if a * t == 0 else sorted({0.0, a * t})


class RadialSpectrumExperiment(VerificationExperiment):
    name = "radial-spectrum"
    anchor = "radial-spectrum: Spec(phi_t) = {0, a t}"
    claim = (
        "For the radial profile F with F = a near the centre, "
        "the time-t map has action spectrum {0, a t}."
    )
    description = "Fixed-point action spectra of radial flows for several times"

    def compute(self, context: ExperimentContext) -> Dict[str, Any]:
        a = float(context.param("a", 0.3))
        t_list = [float(t) for t in context.param("t_list", [0.0, 0.25, 0.5, 1.0])]
        r_max = float(context.param("r_max", 1.0))
        ppa = context.param("points_per_axis", None)
        H = radial_profile(a, r_max, Space.symplectic_base(context.n))
        tolerance = context.tolerance()

        measurements = []
        series: List[Dict[str, Any]] = []
        for t in t_list:
            flow = HamiltonianFlow(H, t, tolerance)
            spec = base_spectrum(flow, points_per_axis=ppa)
            expected = expected_radial_spectrum(a, t)
            deviation = spec.deviation_from(expected)
            measurements += [
                self.equals(f"clusters[t={t:g}]", len(spec), len(expected)),
                self.at_most(f"deviation[t={t:g}]", deviation, SPECTRUM_TOL),
            ]
            series.append(
                {
                    "t": t,
                    "expected": expected,
                    "spectrum": list(spec.values),
                    "deviation": deviation,
                }
            )
            rounded = [round(v, 6) for v in spec.values]
            self._log("time_done", f"t={t:g}: Spec={rounded}")
        return {
            "params": {"a": a, "t_list": t_list, "r_max": r_max, "n": context.n},
            "measurements": measurements,
            "series": series,
        }
