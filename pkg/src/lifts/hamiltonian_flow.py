"""Hamiltonian flows on the symplectic base and their point actions."""

import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from ..errors import UsageError
from ..flows.isotopy import Isotopy, Tolerance
from ..flows.maps import Composite, FlowMap, IntegratedFlowMap, compose
from ..geometry.spaces import Point, Space, SpaceKind
from ..hamiltonians.families import translation_generator
from ..hamiltonians.fields import ScalarField, symplectic_vector_field

logger = logging.getLogger(__name__)


@dataclass
class HamiltonianFlow:
    """The isotopy of ``H`` on the base for ``t`` in ``[0, T]``.

    Its time-``T`` map reports the point action
    ``A(q) = int_0^T (H_t + sum y_i dx_i/dt)(phi_t q) dt`` as travel,
    a primitive of ``phi^* lambda0 - lambda0``.
    """

    H: ScalarField
    T: float = 1.0
    tolerance: Optional[Tolerance] = None

    def __post_init__(self):
        self.H.space.require(SpaceKind.SYMPLECTIC_BASE)
        self.isotopy = Isotopy(symplectic_vector_field(self.H), self.T, self.tolerance)

    @property
    def space(self) -> Space:
        return self.H.space

    @property
    def time_map(self) -> IntegratedFlowMap:
        return self.isotopy.time_map()


BaseMap = Union[HamiltonianFlow, FlowMap]


def as_base_map(flow: BaseMap) -> FlowMap:
    """Accept a :class:`HamiltonianFlow` or any base map with action bookkeeping."""
    base = flow.time_map if isinstance(flow, HamiltonianFlow) else flow
    if base.space.kind != SpaceKind.SYMPLECTIC_BASE:
        raise UsageError(
            f"expected a map of the symplectic base, got one on {base.space}"
        )
    return base


def point_action(flow: BaseMap, q: Point) -> float:
    """Action of ``q`` under the time-``T`` map; additive under composition."""
    base = as_base_map(flow)
    if q.space != base.space:
        raise UsageError(f"{base.label} acts on {base.space}, point lives in {q.space}")
    return float(base.transport(q.coords).travel[0])


def point_actions(flow: BaseMap, coords: np.ndarray) -> np.ndarray:
    return as_base_map(flow).transport(coords).travel


def base_translation(
    shift: float,
    plateau_radius: float,
    support_radius: float,
    n: int = 1,
    tolerance: Optional[Tolerance] = None,
) -> HamiltonianFlow:
    """Compactly supported translation of ``B(plateau_radius)`` by ``shift``."""
    space = Space.symplectic_base(n)
    H = translation_generator(shift, plateau_radius, support_radius, space)
    return HamiltonianFlow(H, 1.0, tolerance)


def hamiltonian_composite(*maps: BaseMap) -> Composite:
    """``maps[0] o maps[1] o ...`` on the base; actions add along the chain."""
    return compose(*[as_base_map(m) for m in maps])
