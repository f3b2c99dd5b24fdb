"""Spectrum of ``psi phi_T psi^-1 phi_t`` where ``psi`` displaces ``supp H``."""

import logging
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..geometry.spaces import Space
from ..hamiltonians.families import radial_profile
from ..lifts.fixed_points import base_spectrum
from ..lifts.hamiltonian_flow import (
    HamiltonianFlow,
    base_translation,
    hamiltonian_composite,
)
from ..flows.maps import FlowMap, conjugate
from ..orchestrator.base import VerificationExperiment
from ..orchestrator.context import ExperimentContext

logger = logging.getLogger(__name__)

SPECTRUM_TOL = 1e-3


def displacement_composite(
    a: float,
    t: float,
    T: float,
    shift: Optional[float] = 3.0,
    n: int = 1,
    tolerance=None,
) -> FlowMap:
    """``psi phi_T psi^-1 phi_t`` for the radial profile of height ``a``.

    ``shift=None`` means ``psi = id``.
    """
    H = radial_profile(a, 1.0, Space.symplectic_base(n))
    phi_t = HamiltonianFlow(H, t, tolerance).time_map
    phi_T = HamiltonianFlow(H, T, tolerance).time_map
    if shift is None:
        return hamiltonian_composite(phi_T, phi_t)
    psi = base_translation(shift, 1.0, abs(shift) + 2.0, n, tolerance).time_map
    return hamiltonian_composite(conjugate(phi_T, psi), phi_t)


def search_box(shift: float, n: int) -> Tuple[np.ndarray, np.ndarray]:
    half = abs(shift) + 2.5
    return -half * np.ones(2 * n), half * np.ones(2 * n)


class DisplacementSpectrumExperiment(VerificationExperiment):
    name = "displacement-spectrum"
    anchor = "displacement-spectrum: Spec = {0, a t, a T}"
    claim = (
        "If psi displaces the support of the radial profile H of height a, then "
        "Spec(psi phi_T psi^-1 phi_t) = {0, a t, a T}."
    )
    description = "Base spectrum of a displaced product of radial flows"

    def compute(self, context: ExperimentContext) -> Dict[str, Any]:
        a = float(context.param("a", 0.3))
        t = float(context.param("t", 1.0 / 3.0))
        T = float(context.param("T", 2.0 / 3.0))
        shift = float(context.param("shift", 3.0))
        ppa = int(context.param("points_per_axis", 41 if context.n == 1 else 9))
        tolerance = context.tolerance()
        region = search_box(shift, context.n)

        scenarios = [
            ("displaced", t, T, shift, [0.0, a * t, a * T]),
            ("t=0", 0.0, T, shift, [0.0, a * T]),
            ("psi=id", t, T, None, [0.0, a * (t + T)]),
        ]
        measurements = []
        series: List[Dict[str, Any]] = []
        for label, s, big_t, psi_shift, expected in scenarios:
            composite = displacement_composite(
                a, s, big_t, psi_shift, context.n, tolerance
            )
            spec = base_spectrum(composite, region, points_per_axis=ppa)
            expected = sorted({round(v, 12) for v in expected})
            deviation = spec.deviation_from(expected)
            measurements += [
                self.equals(f"clusters[{label}]", len(spec), len(expected)),
                self.at_most(f"deviation[{label}]", deviation, SPECTRUM_TOL),
            ]
            series.append(
                {
                    "scenario": label,
                    "t": s,
                    "T": big_t,
                    "expected": expected,
                    "spectrum": list(spec.values),
                }
            )
            rounded = [round(v, 6) for v in spec.values]
            self._log("scenario_done", f"{label}: Spec={rounded}")
        return {
            "params": {
                "a": a,
                "t": t,
                "T": T,
                "shift": shift,
                "points_per_axis": ppa,
                "n": context.n,
            },
            "measurements": measurements,
            "series": series,
        }
