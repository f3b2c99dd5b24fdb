"""Tests for sample regions and the sampled sup-norm estimates."""

import numpy as np
import pytest

from src.constructions import reeb_push
from src.errors import SupportLeakageError, UsageError
from src.flows import identity_map, translation_map
from src.metrics import (
    SampleRegion,
    c0_distance,
    c0_norm,
    displacement_estimates,
    projection_distance,
    sampled_distance,
)


@pytest.fixture
def unit_box(euclidean):
    return SampleRegion.box(euclidean, [-1.0] * 3, [1.0] * 3)


@pytest.fixture
def small_push(prequantized):
    box = ([-0.2, -0.2], [0.2, 0.2])
    return reeb_push(0.05, box, (-0.5, 0.5), prequantized, margin=0.1)


class TestSampleRegion:
    """Tests for SampleRegion."""

    def test_box_appends_circle(self, prequantized):
        region = SampleRegion.box(prequantized, [0.0, 0.0], [1.0, 1.0])
        assert region.lower == (0.0, 0.0, 0.0)
        assert region.upper == (1.0, 1.0, 1.0)

    def test_bounds_checked(self, euclidean):
        with pytest.raises(UsageError):
            SampleRegion.box(euclidean, [0.0, 0.0], [1.0, 1.0])
        with pytest.raises(UsageError):
            SampleRegion.box(euclidean, [1.0] * 3, [0.0] * 3)

    def test_around(self, euclidean):
        region = SampleRegion.around(euclidean, 1.0, inflate=0.5)
        assert region.upper == pytest.approx((1.5, 1.5, 1.5))
        with pytest.raises(UsageError):
            SampleRegion.around(euclidean, float("inf"))

    def test_grid(self, unit_box):
        points, shape, spacing = unit_box.grid(1.0, min_points=2)
        assert shape == (3, 3, 3)
        assert points.shape == (27, 3)
        assert spacing == pytest.approx([1.0, 1.0, 1.0])
        assert unit_box.grid(1.0, min_points=5)[1] == (5, 5, 5)

    def test_circle_axis_is_half_open(self, prequantized):
        region = SampleRegion.box(prequantized, [0.0, 0.0], [1.0, 1.0])
        points, shape, _ = region.grid(0.5, min_points=2)
        assert shape == (3, 3, 2)
        assert set(np.unique(points[:, 2]).tolist()) == {0.0, 0.5}

    def test_grid_is_coarsened(self, unit_box):
        points, _, _ = unit_box.grid(0.01, min_points=2, max_points=1000)
        assert len(points) <= 1000

    def test_bad_mesh(self, unit_box):
        with pytest.raises(UsageError):
            unit_box.grid(0.0)

    def test_inflated(self, prequantized):
        region = SampleRegion.box(prequantized, [0.0, 0.0], [1.0, 1.0]).inflated(2.0)
        assert region.lower == (-0.5, -0.5, 0.0)
        assert region.upper == (1.5, 1.5, 1.0)


class TestSupEstimates:
    """Tests for c0_distance, c0_norm and projection_distance."""

    def test_identity_has_zero_norm(self, euclidean, unit_box):
        estimate = c0_norm(identity_map(euclidean), unit_box, mesh=0.5)
        assert estimate.lower == 0.0
        assert estimate.upper == 0.0

    def test_leakage_raises(self, euclidean, unit_box):
        with pytest.raises(SupportLeakageError) as exc:
            c0_norm(translation_map(euclidean, 1.0), unit_box, mesh=0.5)
        assert exc.value.details["boundary_displacement"] == pytest.approx(1.0)

    def test_translation_without_leakage_check(self, euclidean, unit_box):
        estimate = c0_norm(
            translation_map(euclidean, 1.0), unit_box, mesh=0.5, check_leakage=False
        )
        assert estimate.lower == pytest.approx(1.0)
        assert estimate.certified_upper == pytest.approx(1.0)
        assert estimate.heuristic

    def test_distance_between_translations(self, euclidean, unit_box):
        estimate = c0_distance(
            translation_map(euclidean, 1.0),
            translation_map(euclidean, 0.25),
            unit_box,
            mesh=0.5,
            check_leakage=False,
        )
        assert estimate.lower == pytest.approx(0.75)

    def test_several_regions(self, euclidean):
        regions = [
            SampleRegion.box(euclidean, [0.0] * 3, [1.0] * 3),
            SampleRegion.box(euclidean, [2.0] * 3, [3.0] * 3),
        ]
        estimate = c0_norm(
            translation_map(euclidean, 0.5), regions, mesh=0.5, check_leakage=False
        )
        assert estimate.samples == 2 * 5 ** 3
        assert estimate.lower == pytest.approx(0.5)

    def test_unbounded_support_needs_region(self, euclidean):
        with pytest.raises(UsageError):
            c0_norm(translation_map(euclidean, 1.0))

    def test_space_mismatch(self, euclidean, prequantized):
        with pytest.raises(UsageError):
            c0_distance(identity_map(euclidean), identity_map(prequantized))

    def test_reeb_push(self, small_push):
        c0, projection = displacement_estimates(small_push, mesh=0.05)
        assert c0.lower >= 0.05 - 1e-9
        assert projection.lower >= 0.05 - 1e-9
        assert c0.certified_upper >= c0.lower
        assert projection.upper >= projection.lower

    def test_projection_needs_prequantized(self, euclidean, unit_box):
        with pytest.raises(UsageError):
            projection_distance(identity_map(euclidean), unit_box)

    def test_projection_of_circle_shift(self, prequantized):
        region = SampleRegion.box(prequantized, [-1.0, -1.0], [1.0, 1.0])
        shift = translation_map(prequantized, 0.0)
        estimate = projection_distance(shift, region, mesh=0.5)
        assert estimate.lower == 0.0

    def test_sampled_distance(self, euclidean, rng):
        samples = rng.uniform(-1.0, 1.0, size=(30, 3))
        estimate = sampled_distance(
            translation_map(euclidean, 1.0), translation_map(euclidean, 0.5), samples
        )
        assert estimate.lower == pytest.approx(0.5)
        assert estimate.samples == 30
        assert estimate.certified_upper is None
