"""Seeded random contactomorphisms: lifts, Reeb pushes and contact flows.

All of them are flows of random finite sums of named-family generators with
bounded coefficients, so they are smooth and compactly supported.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np

from ..constructions.translations import cutoff_translation, reeb_push
from ..flows.isotopy import Isotopy, Tolerance
from ..flows.maps import FlowMap, compose
from ..geometry.spaces import Space
from ..hamiltonians.families import random_contact_hamiltonian, random_hamiltonian
from ..hamiltonians.fields import ScalarField, contact_vector_field
from ..lifts.hamiltonian_flow import HamiltonianFlow
from ..lifts.lift import lift, lifted_hamiltonian

logger = logging.getLogger(__name__)

KINDS = ("lift", "reeb_push", "contact_flow")


@dataclass
class RandomMap:
    kind: str
    map: FlowMap
    generator: Optional[ScalarField] = None
    params: Dict[str, Any] = field(default_factory=dict)


def random_base_hamiltonian(
    rng: np.random.Generator, n: int, amplitude: float = 0.2
) -> ScalarField:
    return random_hamiltonian(
        rng,
        Space.symplectic_base(n),
        n_terms=int(rng.integers(1, 4)),
        amplitude=amplitude,
        radius_range=(0.4, 0.9),
        center_scale=0.4,
        z_dependent=False,
    )


def random_lift(
    rng: np.random.Generator, n: int = 1, tolerance: Optional[Tolerance] = None
) -> RandomMap:
    H = random_base_hamiltonian(rng, n)
    f = lift(HamiltonianFlow(H, 1.0, tolerance))
    return RandomMap("lift", f, lifted_hamiltonian(H), {"H": H.label})


def random_reeb_push(
    rng: np.random.Generator, n: int = 1, tolerance: Optional[Tolerance] = None
) -> RandomMap:
    space = Space.prequantized(n)
    t = float(rng.uniform(-0.45, 0.45))
    half = float(rng.uniform(0.2, 0.5))
    m = space.support_dimension
    box = (-half * np.ones(m), half * np.ones(m))
    f = reeb_push(t, box, (-half - 0.3, half + 0.3), space, tolerance, margin=0.2)
    return RandomMap("reeb_push", f, None, {"t": t, "half_width": half})


def random_contact_flow(
    rng: np.random.Generator,
    space: Optional[Space] = None,
    amplitude: float = 0.08,
    tolerance: Optional[Tolerance] = None,
) -> RandomMap:
    space = space or Space.prequantized(1)
    K = random_contact_hamiltonian(
        rng, space, n_terms=int(rng.integers(1, 4)), amplitude=amplitude
    )
    f = Isotopy(contact_vector_field(K), 1.0, tolerance).time_map()
    return RandomMap("contact_flow", f, K, {"H": K.label})


def random_small_map(
    rng: np.random.Generator, n: int = 1, tolerance: Optional[Tolerance] = None
) -> RandomMap:
    """One of the three kinds, chosen by ``rng``."""
    kind = KINDS[int(rng.integers(len(KINDS)))]
    if kind == "lift":
        return random_lift(rng, n, tolerance)
    if kind == "reeb_push":
        return random_reeb_push(rng, n, tolerance)
    return random_contact_flow(rng, Space.prequantized(n), tolerance=tolerance)


def random_conjugator(
    rng: np.random.Generator, n: int = 1, tolerance: Optional[Tolerance] = None
) -> RandomMap:
    """Cut-off translation along ``x_1`` after a random ``z``-dependent contact flow."""
    space = Space.prequantized(n)
    shift = float(rng.uniform(-1.0, 1.0))
    flow = random_contact_flow(rng, space, amplitude=0.05, tolerance=tolerance)
    translation = cutoff_translation(shift, 1.0, 2.0 + abs(shift), space, tolerance)
    psi = compose(translation, flow.map)
    params = {"shift": shift, "H": flow.params["H"]}
    return RandomMap("conjugator", psi, flow.generator, params)
