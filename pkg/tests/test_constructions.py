"""Tests for squeezes, translations, Reeb pushes, basis change and Rokhlin elements."""

import math

import numpy as np
import pytest

from src.constructions import (
    basis_change,
    basis_change_map,
    cutoff_translation,
    family_maps,
    fragment_center,
    fragment_radius,
    fragment_strip,
    reeb_push,
    rokhlin_element,
    rokhlin_extract,
    scaling,
    squeeze,
)
from src.errors import UsageError
from src.flows import pullback_defect
from src.geometry import OneForm, Point, Space
from src.metrics import sampled_distance
from src.utils import ball_samples


class TestSqueeze:
    """Tests for squeeze."""

    def test_scales_inner_ball(self, euclidean):
        s = squeeze(0.5, 1.0, 2.0, sweep_samples=200)
        assert s.max_scaling_error < 1e-5
        assert s.max_identity_error < 1e-6
        X = np.array([[0.2, -0.1, 0.3]])
        expected = scaling(euclidean, 0.5, X)[0]
        assert s.map.apply(X)[0] == pytest.approx(expected, abs=1e-5)
        assert s.support_radius <= 2.0

    def test_conformal_factor(self):
        s = squeeze(0.5, 1.0, 2.0, sweep_samples=50)
        result = s.map.transport(np.zeros((1, 3)))
        assert result.log_conformal[0] == pytest.approx(2.0 * math.log(0.5), abs=1e-8)

    def test_identity_outside(self):
        s = squeeze(0.3, 0.5, 1.0, sweep_samples=50)
        X = np.array([[1.2, 0.0, 0.0], [0.0, 0.0, -3.0]])
        assert s.map.apply(X) == pytest.approx(X)

    def test_unit_factor_is_identity(self):
        s = squeeze(1.0, 1.0, 2.0, sweep_samples=20)
        X = np.array([[0.3, 0.3, 0.3]])
        assert s.map.apply(X) == pytest.approx(X)

    @pytest.mark.parametrize(
        "a, r, R",
        [(0.0, 1.0, 2.0), (1.5, 1.0, 2.0), (0.5, 2.0, 1.0), (0.5, 0.0, 1.0)],
    )
    def test_invalid_parameters(self, a, r, R):
        with pytest.raises(UsageError):
            squeeze(a, r, R)

    def test_scaling(self, euclidean):
        out = scaling(euclidean, 0.5, np.array([2.0, 4.0, 8.0]))
        assert out.tolist() == [1.0, 2.0, 2.0]


class TestTranslations:
    """Tests for cutoff_translation and reeb_push."""

    def test_cutoff_translation(self):
        f = cutoff_translation(1.0, 0.5, 2.0, verify_samples=50)
        X = np.array([[0.0, 0.0, 0.0], [0.1, 0.2, 0.3], [3.0, 0.0, 0.0]])
        expected = np.array([[1.0, 0.0, 0.0], [1.1, 0.2, 0.3], [3.0, 0.0, 0.0]])
        assert f.apply(X) == pytest.approx(expected, abs=1e-6)

    def test_cutoff_translation_on_prequantized(self, prequantized):
        f = cutoff_translation(1.0, 0.5, 2.0, prequantized, verify_samples=20)
        result = f.transport(np.array([[0.0, 0.0, 0.4]]))
        assert result.image[0] == pytest.approx([1.0, 0.0, 0.4], abs=1e-6)
        assert result.travel[0] == pytest.approx(0.0, abs=1e-8)

    def test_cutoff_translation_too_far(self):
        with pytest.raises(UsageError):
            cutoff_translation(2.0, 0.5, 2.0)

    def test_reeb_push_euclidean(self, euclidean):
        f = reeb_push(0.3, ([-0.2] * 3, [0.2] * 3), (-0.5, 0.5), euclidean)
        result = f.transport(np.array([[0.0, 0.1, 0.1]]))
        assert result.image[0] == pytest.approx([0.0, 0.1, 0.4], abs=1e-6)
        assert result.log_conformal[0] == pytest.approx(0.0, abs=1e-12)
        far = np.array([[0.6, 0.0, 0.0]])
        assert f.apply(far) == pytest.approx(far)

    def test_reeb_push_prequantized_wraps(self, prequantized):
        f = reeb_push(0.45, ([-0.2, -0.2], [0.2, 0.2]), (-0.5, 0.5), prequantized)
        result = f.transport(np.array([[0.0, 0.0, 0.8]]))
        assert result.image[0, 2] == pytest.approx(0.25, abs=1e-6)
        assert result.travel[0] == pytest.approx(0.45, abs=1e-6)

    def test_reeb_push_strip(self, euclidean):
        with pytest.raises(UsageError):
            reeb_push(0.3, ([-0.2] * 3, [0.2] * 3), (0.0, 0.5), euclidean)

    def test_reeb_push_needs_contact_space(self, base):
        with pytest.raises(UsageError):
            reeb_push(0.3, ([-0.2] * 2, [0.2] * 2), (-0.5, 0.5), base)

    def test_reeb_push_box_shape(self, euclidean):
        with pytest.raises(UsageError):
            reeb_push(0.3, ([-0.2] * 2, [0.2] * 2), (-0.5, 0.5), euclidean)


class TestBasisChange:
    """Tests for basis_change."""

    def test_formula(self, euclidean):
        q = basis_change(Point(euclidean, [1.0, 1.0, 0.0]))
        assert q.coords == pytest.approx([0.0, math.sqrt(2.0), -0.5])

    def test_radius_preserved(self, prequantized, rng):
        X = rng.uniform(-1.0, 1.0, size=(20, 3))
        X[:, 2] = np.mod(X[:, 2], 1.0)
        Y = basis_change_map(prequantized).apply(X)
        radii = np.linalg.norm(X[:, :2], axis=1)
        assert np.linalg.norm(Y[:, :2], axis=1) == pytest.approx(radii)

    def test_inverse(self, euclidean, rng):
        f = basis_change_map(euclidean)
        X = rng.uniform(-1.0, 1.0, size=(10, 3))
        assert f.inverse().apply(f.apply(X)) == pytest.approx(X)

    def test_pulls_back_rotation_invariant_form(self, euclidean):
        f = basis_change_map(euclidean)
        p = Point(euclidean, [0.4, -0.7, 0.2])
        defect = pullback_defect(
            f, OneForm.alpha0_prime(euclidean), p, reference=OneForm.alpha0(euclidean)
        )
        assert defect.conformal == pytest.approx(1.0, abs=1e-6)
        assert defect.residual < 1e-6

    def test_needs_contact_space(self, base):
        with pytest.raises(UsageError):
            basis_change(Point(base, [0.0, 0.0]))


class TestRokhlinGeometry:
    """Placement of the fragments."""

    def test_centres_and_radii(self):
        assert fragment_center(1) == 0.5
        assert fragment_center(2) == 1.25
        assert fragment_radius(3) == 0.125

    def test_fragments_fit_their_strips(self):
        for i in range(1, 8):
            lo, hi = fragment_strip(i)
            assert lo <= fragment_center(i) - fragment_radius(i)
            assert fragment_center(i) + fragment_radius(i) <= hi
            assert fragment_strip(i + 1)[0] == hi

    def test_unknown_family(self):
        with pytest.raises(UsageError):
            family_maps("spiral", 2)


class TestRokhlinElement:
    """Tests for rokhlin_element and rokhlin_extract."""

    @pytest.fixture
    def identity_element(self):
        return rokhlin_element(family_maps("identity", 2), verify_samples=10)

    def test_identity_fragments(self, identity_element):
        g = identity_element
        assert g.truncation == 2
        assert g.squeeze_factors == [1.0, 1.0]
        X = np.array([[0.5, 0.0, 0.0], [1.25, 0.01, 0.0]])
        assert g.composite.apply(X) == pytest.approx(X, abs=1e-7)

    def test_truncation_range(self):
        with pytest.raises(UsageError):
            rokhlin_element(family_maps("identity", 2), N=3)
        with pytest.raises(UsageError):
            rokhlin_element(family_maps("identity", 2), N=0)

    def test_euclidean_only(self):
        with pytest.raises(UsageError):
            rokhlin_element(family_maps("identity", 1, Space.prequantized(1)))

    def test_extract_arguments(self, identity_element):
        with pytest.raises(UsageError):
            rokhlin_extract(identity_element, 3, 0.1)
        with pytest.raises(UsageError):
            rokhlin_extract(identity_element, 1, 1.5)
        with pytest.raises(UsageError):
            rokhlin_extract(identity_element, 1, 0.1, push_time=2.0)

    @pytest.mark.slow
    def test_extraction_approximates_fragment(self, rng):
        g = rokhlin_element(family_maps("squeeze", 2), verify_samples=20)
        eps = 0.1
        extraction = rokhlin_extract(g, 1, eps)
        samples = ball_samples(
            rng, 40, 3, extraction.target_radius, extraction.target_center
        )
        distance = sampled_distance(extraction.approximant, extraction.target, samples)
        assert distance.lower <= 2 * eps
        assert extraction.regions()["shrunk_rest"][1] == pytest.approx(eps * np.ones(3))
