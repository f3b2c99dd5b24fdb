"""Tests for base Hamiltonian flows, point actions and lifts."""

import numpy as np
import pytest

from src.errors import UsageError
from src.flows import compose, translation_map
from src.geometry import Point, Space, coordinate_difference, wrap_unit
from src.hamiltonians import coordinate, radial_profile, random_hamiltonian
from src.lifts import (
    HamiltonianFlow,
    base_spectrum,
    base_translation,
    contact_lift_route,
    find_fixed_points,
    hamiltonian_composite,
    lift,
    lifted_hamiltonian,
    point_action,
    point_actions,
)


@pytest.fixture
def radial_flow():
    return HamiltonianFlow(radial_profile(0.3, 1.0))


class TestHamiltonianFlow:
    """Tests for HamiltonianFlow and point actions."""

    def test_needs_base(self, euclidean):
        with pytest.raises(UsageError):
            HamiltonianFlow(coordinate(euclidean, 0))

    def test_action_at_centre(self, radial_flow, base):
        action = point_action(radial_flow, Point(base, [0.0, 0.0]))
        assert action == pytest.approx(0.3, abs=1e-9)

    def test_action_outside_support(self, radial_flow):
        actions = point_actions(radial_flow, np.array([[1.5, 0.0], [0.0, -2.0]]))
        assert actions == pytest.approx([0.0, 0.0], abs=1e-12)

    def test_action_scales_with_time(self, base):
        flow = HamiltonianFlow(radial_profile(0.3, 1.0), T=0.5)
        action = point_action(flow, Point(base, [0.0, 0.0]))
        assert action == pytest.approx(0.15, abs=1e-9)

    def test_point_space_mismatch(self, radial_flow, prequantized):
        with pytest.raises(UsageError):
            point_action(radial_flow, Point(prequantized, [0.0, 0.0, 0.0]))

    def test_composite_actions_add(self, base):
        f = HamiltonianFlow(radial_profile(0.3, 1.0))
        g = HamiltonianFlow(radial_profile(0.2, 1.0))
        fg = hamiltonian_composite(f, g)
        assert point_action(fg, Point(base, [0.0, 0.0])) == pytest.approx(0.5, abs=1e-9)

    def test_composite_rejects_contact_maps(self, euclidean):
        with pytest.raises(UsageError):
            hamiltonian_composite(translation_map(euclidean, 1.0))

    def test_base_translation(self, base):
        flow = base_translation(1.0, 0.5, 2.0)
        result = flow.time_map.transport(np.array([[0.0, 0.0], [0.1, 0.2]]))
        expected = np.array([[1.0, 0.0], [1.1, 0.2]])
        assert result.image == pytest.approx(expected, abs=1e-8)
        assert result.travel[0] == pytest.approx(0.0, abs=1e-9)


class TestLift:
    """Tests for LiftMap and the contact route."""

    def test_lift_moves_z_by_action(self, radial_flow, prequantized):
        f = lift(radial_flow)
        assert f.space == prequantized
        result = f.transport(np.array([[0.0, 0.0, 0.9]]))
        assert result.image[0] == pytest.approx([0.0, 0.0, 0.2], abs=1e-9)
        assert result.travel[0] == pytest.approx(0.3, abs=1e-9)
        assert result.log_conformal[0] == 0.0

    def test_inverse(self, radial_flow, prequantized, rng):
        f = lift(radial_flow)
        X = rng.uniform(-0.8, 0.8, size=(10, 3))
        X[:, 2] = wrap_unit(X[:, 2])
        back = f.inverse().apply(f.apply(X))
        assert np.max(np.abs(coordinate_difference(prequantized, X, back))) < 1e-7

    def test_lift_of_contact_map_rejected(self, euclidean):
        with pytest.raises(UsageError):
            lift(translation_map(euclidean, 1.0))

    def test_lifted_hamiltonian_ignores_z(self, base):
        H_hat = lifted_hamiltonian(coordinate(base, 0))
        X = np.array([[0.5, 0.0, 0.1], [0.5, 0.0, 0.7]])
        assert H_hat.value(0.0, X) == pytest.approx([0.5, 0.5])
        assert H_hat.gradient(0.0, X)[:, 2] == pytest.approx([0.0, 0.0])

    def test_lifted_hamiltonian_needs_base(self, euclidean):
        with pytest.raises(UsageError):
            lifted_hamiltonian(coordinate(euclidean, 0))

    def test_routes_agree(self, base, rng):
        flow = HamiltonianFlow(random_hamiltonian(rng, base, amplitude=0.2))
        X = rng.uniform(-0.6, 0.6, size=(12, 3))
        X[:, 2] = wrap_unit(X[:, 2])
        direct = lift(flow).transport(X)
        routed = contact_lift_route(flow).transport(X)
        diff = coordinate_difference(
            flow.space.prequantization(), direct.image, routed.image
        )
        assert np.max(np.abs(diff)) < 1e-7
        assert routed.travel == pytest.approx(direct.travel, abs=1e-7)
        assert routed.log_conformal == pytest.approx(np.zeros(12), abs=1e-9)

    def test_lift_of_composite(self, base):
        f = HamiltonianFlow(radial_profile(0.3, 1.0))
        g = HamiltonianFlow(radial_profile(0.2, 1.0))
        lifted = lift(hamiltonian_composite(f, g))
        separately = compose(lift(f), lift(g))
        X = np.array([[0.0, 0.0, 0.1], [0.4, -0.3, 0.6]])
        expected = separately.transport(X).travel
        assert lifted.transport(X).travel == pytest.approx(expected, abs=1e-8)


class TestFixedPoints:
    """Tests for find_fixed_points and base_spectrum."""

    def test_radial_spectrum(self, radial_flow):
        found = base_spectrum(radial_flow, points_per_axis=21)
        assert found.matches([0.0, 0.3], 1e-6)

    def test_fixed_points_include_centre(self, radial_flow):
        roots = find_fixed_points(radial_flow, points_per_axis=20)
        assert np.min(np.linalg.norm(roots, axis=1)) < 1e-9

    def test_one_representative_outside_support(self, radial_flow):
        roots = find_fixed_points(radial_flow, points_per_axis=11, inflate=0.5)
        assert int(np.sum(np.linalg.norm(roots, axis=1) > 1.0)) == 1

    def test_base_spectrum_of_identity_like_flow(self):
        flow = HamiltonianFlow(radial_profile(0.0, 1.0))
        found = base_spectrum(
            flow, search_region=([-1.0, -1.0], [1.0, 1.0]), points_per_axis=5
        )
        assert found.values == pytest.approx((0.0,))

    def test_higher_dimension(self):
        flow = HamiltonianFlow(radial_profile(0.25, 1.0, Space.symplectic_base(2)))
        action = point_action(flow, Point(flow.space, [0.0, 0.0, 0.0, 0.0]))
        assert action == pytest.approx(0.25, abs=1e-9)
