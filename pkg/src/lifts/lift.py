"""Lifts of Hamiltonian diffeomorphisms of the base to the prequantized space."""

import logging
from typing import Optional

import numpy as np

from ..flows.isotopy import Isotopy, Tolerance
from ..flows.maps import FlowMap, IntegratedFlowMap, MapResult
from ..geometry.spaces import SpaceKind
from ..hamiltonians.fields import ScalarField, contact_vector_field
from .hamiltonian_flow import BaseMap, HamiltonianFlow, as_base_map

logger = logging.getLogger(__name__)


class LiftMap(FlowMap):
    """``(q, z) -> (phi(q), z + A(q) mod 1)`` on ``R^{2n} x S^1``.

    A strict contactomorphism of ``alpha0``: travel is the point action and
    the conformal factor is one.
    """

    def __init__(self, base: FlowMap, label: Optional[str] = None):
        super().__init__(
            base.space.prequantization(),
            base.support_radius,
            label or f"lift({base.label})",
        )
        self.base = base

    def transport(self, coords: np.ndarray) -> MapResult:
        X = self.space.check_coords(coords)
        m = self.space.support_dimension
        step = self.base.transport(X[:, :m])
        image = np.empty_like(X)
        image[:, :m] = step.image
        image[:, m] = X[:, m] + step.travel
        return MapResult(self.space.wrap(image), step.travel, np.zeros(X.shape[0]))

    def inverse(self) -> "LiftMap":
        return LiftMap(self.base.inverse(), label=f"{self.label}^-1")


def lift(flow: BaseMap) -> LiftMap:
    """Lift a base Hamiltonian map (flow, composite or conjugate) to ``R^2n x S^1``."""
    return LiftMap(as_base_map(flow))


def lifted_hamiltonian(H: ScalarField) -> ScalarField:
    """``H_hat(q, z) = H(q)``: its contact flow is the lift of the flow of ``H``."""
    H.space.require(SpaceKind.SYMPLECTIC_BASE)
    space = H.space.prequantization()
    m = space.support_dimension

    def value_fn(t, X):
        return H.value_fn(t, X[:, :m])

    def gradient_fn(t, X):
        g = np.zeros_like(X)
        g[:, :m] = H.gradient_fn(t, X[:, :m])
        return g

    return ScalarField(
        space, value_fn, gradient_fn, H.support_radius, f"{H.label}^", H.autonomous
    )


def contact_lift_route(
    flow: HamiltonianFlow, tolerance: Optional[Tolerance] = None
) -> IntegratedFlowMap:
    """The lift obtained by integrating the contact field of ``H_hat``."""
    field = contact_vector_field(lifted_hamiltonian(flow.H))
    return Isotopy(field, flow.T, tolerance or flow.tolerance).time_map()

