"""Tests for isotopies, flow maps, composition and path actions."""

import math

import numpy as np
import pytest

from src.errors import IntegrationError, UsageError
from src.flows import (
    Composite,
    ExplicitMap,
    IntegratedFlowMap,
    Isotopy,
    Tolerance,
    compose,
    conjugate,
    identity_map,
    image_support_bound,
    integrate,
    path_action,
    path_action_along,
    pullback_defect,
    translation_map,
)
from src.geometry import OneForm, Point, coordinate_difference, wrap_unit
from src.hamiltonians import (
    VectorField,
    coordinate,
    contact_vector_field,
    random_contact_hamiltonian,
    reeb_field,
    symplectic_vector_field,
)


def rotation_generator(space):
    x = coordinate(space, 0)
    y = coordinate(space, 1)
    return (x * x + y * y).scaled(0.5)


class TestTolerance:
    """Tests for Tolerance."""

    def test_from_atol(self):
        tol = Tolerance.from_atol(1e-8)
        assert tol.rtol == pytest.approx(1e-7)

    def test_scaled(self):
        atol, rtol = Tolerance(1e-10, 1e-9).scaled(100)
        assert atol == pytest.approx(1e-11)
        assert rtol == pytest.approx(1e-10)

    def test_non_positive(self):
        with pytest.raises(UsageError):
            Tolerance(0.0, 1e-9)


class TestIsotopy:
    """Tests for Isotopy."""

    def test_reeb_flow_wraps(self, prequantized):
        iso = Isotopy(reeb_field(prequantized), 0.7)
        p = Point(prequantized, [0.1, 0.2, 0.5])
        q = iso.evaluate(0.7, p)
        assert q.z == pytest.approx(0.2, abs=1e-9)
        assert q.x[0] == pytest.approx(0.1)

    def test_time_zero_is_identity(self, prequantized, rng):
        H = random_contact_hamiltonian(rng, prequantized)
        iso = integrate(contact_vector_field(H))
        X = rng.uniform(0.0, 0.9, size=(5, 3))
        assert np.array_equal(iso.evaluate(0.0, X), X)

    def test_equal_times_copy(self, euclidean):
        iso = Isotopy(reeb_field(euclidean))
        X = np.array([[0.0, 0.0, 0.0]])
        end, acc = iso.advance(X, 0.3, 0.3)
        assert np.array_equal(end, X)
        assert end is not X
        assert acc[0] == 0.0

    def test_infinite_time(self, euclidean):
        with pytest.raises(UsageError):
            Isotopy(reeb_field(euclidean), math.inf)

    def test_blow_up_raises(self, euclidean):
        def rhs(t, X):
            V = np.zeros_like(X)
            V[:, 0] = X[:, 0] ** 2
            return V, np.zeros(X.shape[0])

        iso = Isotopy(VectorField(euclidean, rhs, label="blow-up"), 2.0)
        with pytest.raises(IntegrationError) as exc:
            iso.advance(np.array([[1.0, 0.0, 0.0]]), 0.0, 2.0)
        assert exc.value.details["time"] <= 2.0

    def test_trajectory(self, euclidean):
        iso = Isotopy(reeb_field(euclidean), 1.0)
        traj = iso.trajectory(np.array([[0.0, 0.0, 0.25]]))
        coords, acc = traj.state(0.5)
        assert coords[0, 2] == pytest.approx(0.75)
        assert acc[0] == pytest.approx(0.0)
        assert traj.positions(1.0)[0, 2] == pytest.approx(1.25)
        with pytest.raises(UsageError):
            traj.state(1.5)

    def test_trajectory_is_cached(self, euclidean):
        iso = Isotopy(reeb_field(euclidean), 1.0)
        start = np.array([[0.0, 0.0, 0.25]])
        first = iso.trajectory(start)
        assert iso.trajectory(start.copy()) is first
        assert iso.trajectory(start, 0.0, 0.5) is not first
        assert iso.trajectory(np.array([[0.0, 0.0, 0.5]])) is not first

    def test_trajectory_cache_is_bounded(self, euclidean, monkeypatch):
        monkeypatch.setattr("src.flows.isotopy.TRAJECTORY_CACHE_SIZE", 2)
        iso = Isotopy(reeb_field(euclidean), 1.0)
        first = iso.trajectory(np.array([[0.0, 0.0, 0.1]]))
        iso.trajectory(np.array([[0.0, 0.0, 0.2]]))
        iso.trajectory(np.array([[0.0, 0.0, 0.3]]))
        assert iso.trajectory(np.array([[0.0, 0.0, 0.1]])) is not first


class TestActionsAndConformalFactors:
    """Accumulator bookkeeping of the integrated maps."""

    def test_rotation_action(self, base):
        field = symplectic_vector_field(rotation_generator(base))
        f = Isotopy(field, math.pi / 4).time_map()
        result = f.transport(np.array([[1.0, 0.0]]))
        expected = [math.cos(math.pi / 4), math.sin(math.pi / 4)]
        assert result.image[0] == pytest.approx(expected, abs=1e-8)
        assert result.travel[0] == pytest.approx(0.25, abs=1e-8)
        assert result.log_conformal[0] == 0.0

    def test_z_generator_scales_the_form(self, euclidean):
        f = Isotopy(contact_vector_field(coordinate(euclidean, 2)), 0.5).time_map()
        result = f.transport(np.array([[0.1, 0.5, 2.0]]))
        assert result.log_conformal[0] == pytest.approx(0.5, abs=1e-8)
        expected = [0.1, 0.5 * math.exp(0.5), 2.0 * math.exp(0.5)]
        assert result.image[0] == pytest.approx(expected, rel=1e-8)
        assert result.travel[0] == pytest.approx(2.0 * (math.exp(0.5) - 1.0), rel=1e-8)

    def test_reeb_travel_is_unwrapped(self, prequantized):
        f = Isotopy(reeb_field(prequantized), 2.3).time_map()
        result = f.transport(np.array([[0.0, 0.0, 0.9]]))
        assert result.travel[0] == pytest.approx(2.3, abs=1e-9)
        assert result.image[0, 2] == pytest.approx(0.2, abs=1e-9)

    def test_split_time_is_additive(self, prequantized, rng):
        H = random_contact_hamiltonian(rng, prequantized, amplitude=0.2)
        iso = Isotopy(contact_vector_field(H), 1.0)
        X = rng.uniform(-0.4, 0.4, size=(10, 3))
        X[:, 2] = wrap_unit(X[:, 2])
        whole = iso.time_map().transport(X)
        halves = compose(
            IntegratedFlowMap(iso, 0.5, 1.0), IntegratedFlowMap(iso, 0.0, 0.5)
        ).transport(X)
        diff = coordinate_difference(prequantized, whole.image, halves.image)
        assert np.max(np.abs(diff)) < 1e-8
        assert halves.travel == pytest.approx(whole.travel, abs=1e-8)
        assert halves.log_conformal == pytest.approx(whole.log_conformal, abs=1e-8)


class TestFlowMaps:
    """Tests for inverses, composites and explicit maps."""

    def test_inverse_round_trip(self, prequantized, rng):
        H = random_contact_hamiltonian(rng, prequantized, amplitude=0.2)
        f = Isotopy(contact_vector_field(H)).time_map()
        X = rng.uniform(-0.5, 0.5, size=(20, 3))
        X[:, 2] = wrap_unit(X[:, 2])
        forward = f.transport(X)
        back = f.inverse().transport(forward.image)
        assert np.max(np.abs(coordinate_difference(prequantized, X, back.image))) < 1e-7
        assert back.travel == pytest.approx(-forward.travel, abs=1e-7)
        assert back.log_conformal == pytest.approx(-forward.log_conformal, abs=1e-7)

    def test_explicit_inverse_negates_travel(self, euclidean):
        def shear(sign):
            def fn(X):
                Y = X.copy()
                Y[:, 2] += sign * X[:, 0]
                return Y

            return fn

        f = ExplicitMap(
            euclidean, shear(1), shear(-1), travel_fn=lambda X: X[:, 0].copy()
        )
        X = np.array([[0.5, 0.0, 1.0]])
        Y = f.apply(X)
        assert Y[0, 2] == pytest.approx(1.5)
        assert f.inverse().transport(Y).travel[0] == pytest.approx(-0.5)

    def test_point_and_inverse_application(self, euclidean, prequantized):
        f = translation_map(euclidean, 0.5)
        image = f(Point(euclidean, [0.0, 0.0, 0.0]))
        assert image.coords == pytest.approx([0.5, 0.0, 0.0])
        back = f.apply_inverse(np.array([[0.5, 1.0, 2.0]]))
        assert back[0] == pytest.approx([0.0, 1.0, 2.0])
        image, travel, log_conformal = f.apply_with_travel(np.array([[0.0, 1.0, 2.0]]))
        assert image[0] == pytest.approx([0.5, 1.0, 2.0])
        assert travel[0] == 0.0
        assert log_conformal[0] == 0.0
        with pytest.raises(UsageError):
            f(Point(prequantized, [0.0, 0.0, 0.0]))

    def test_explicit_travel_defaults_to_circle_displacement(self, prequantized):
        f = translation_map(prequantized, 1.0)
        assert f.transport(np.array([[0.0, 0.0, 0.3]])).travel[0] == 0.0
        shift = ExplicitMap(
            prequantized,
            lambda X: X + np.array([0.0, 0.0, 0.2]),
            lambda X: X - np.array([0.0, 0.0, 0.2]),
        )
        step = shift.transport(np.array([[0.0, 0.0, 0.9]]))
        assert step.travel[0] == pytest.approx(0.2)

    def test_composite_order(self, euclidean):
        T = translation_map(euclidean, 1.0)
        S = ExplicitMap(euclidean, lambda X: 2.0 * X, lambda X: 0.5 * X, label="scale")
        X = np.array([[1.0, 0.0, 0.0]])
        assert compose(T, S).apply(X)[0, 0] == pytest.approx(3.0)
        assert compose(S, T).apply(X)[0, 0] == pytest.approx(4.0)

    def test_compose_flattens(self, euclidean):
        T = translation_map(euclidean, 1.0)
        assert len(compose(compose(T, T), T).factors) == 3

    def test_composite_space_mismatch(self, euclidean, prequantized):
        with pytest.raises(UsageError):
            Composite([identity_map(euclidean), identity_map(prequantized)])
        with pytest.raises(UsageError):
            Composite([])

    def test_point_call(self, euclidean, base):
        T = translation_map(euclidean, 1.0)
        assert T(Point(euclidean, [0.0, 0.0, 0.0])).x[0] == 1.0
        with pytest.raises(UsageError):
            T(Point(base, [0.0, 0.0]))


class TestSupportBounds:
    """Tests for image_support_bound and conjugate."""

    def test_trivial_cases(self, euclidean):
        T = translation_map(euclidean, 3.0)
        assert math.isinf(image_support_bound(T, math.inf))
        assert image_support_bound(T, 0.0) == 0.0
        assert image_support_bound(identity_map(euclidean), 1.0) == pytest.approx(1.0)

    def test_translated_ball(self, euclidean):
        bound = image_support_bound(translation_map(euclidean, 3.0), 1.0)
        assert 3.9 <= bound <= 5.0

    def test_conjugate_support(self, euclidean):
        f = identity_map(euclidean)
        f.support_radius = 1.0
        g = conjugate(f, translation_map(euclidean, 3.0))
        assert 3.9 <= g.support_radius <= 5.0
        assert len(g.factors) == 3


class TestPathActions:
    """Tests for path_action, path_action_along and pullback_defect."""

    def test_reeb_path_action(self, prequantized):
        iso = Isotopy(reeb_field(prequantized), 0.7)
        action = path_action(iso, Point(prequantized, [0.0, 0.0, 0.5]))
        assert action == pytest.approx(0.7, abs=1e-9)

    def test_path_action_needs_prequantized(self, euclidean, prequantized):
        origin = Point(euclidean, [0.0, 0.0, 0.0])
        with pytest.raises(UsageError):
            path_action(Isotopy(reeb_field(euclidean)), origin)
        with pytest.raises(UsageError):
            path_action(Isotopy(reeb_field(prequantized)), origin)

    def test_sampled_path(self):
        def path(t):
            return np.array([[0.0, 0.0, wrap_unit(t)], [0.0, 0.0, wrap_unit(-0.5 * t)]])

        travel = path_action_along(path, np.linspace(0.0, 2.5, 51))
        assert travel == pytest.approx([2.5, -1.25], abs=1e-12)

    def test_sampled_path_needs_two_times(self):
        with pytest.raises(UsageError):
            path_action_along(lambda t: np.zeros((1, 3)), [0.0])

    def test_pullback_of_strict_map(self, prequantized):
        f = Isotopy(reeb_field(prequantized), 0.3).time_map()
        p = Point(prequantized, [0.2, -0.1, 0.4])
        defect = pullback_defect(f, OneForm.alpha0(prequantized), p)
        assert defect.conformal == pytest.approx(1.0, abs=1e-5)
        assert defect.residual < 1e-5
        assert not defect.flagged

    def test_pullback_of_conformal_map(self, euclidean):
        f = Isotopy(contact_vector_field(coordinate(euclidean, 2)), 0.5).time_map()
        p = Point(euclidean, [0.1, 0.3, 0.2])
        defect = pullback_defect(f, OneForm.alpha0(euclidean), p)
        assert defect.conformal == pytest.approx(math.exp(0.5), rel=1e-4)
        assert defect.log_conformal == pytest.approx(0.5, abs=1e-4)
        assert defect.residual < 1e-4
