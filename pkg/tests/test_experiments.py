"""Tests for the experiment helpers and reduced runs of the experiments."""

import numpy as np
import pytest

from src.experiments import (
    BasisChangeExperiment,
    CoVsC0Experiment,
    ContactCertificateExperiment,
    DisplacementSpectrumExperiment,
    LiftEndpointsExperiment,
    PathIndependenceExperiment,
    RationalRotationExperiment,
    RokhlinDemoExperiment,
    SpectrumBoundExperiment,
    SqueezeFormulaExperiment,
)
from src.experiments.displacement_spectrum import search_box
from src.experiments.lift_endpoints import (
    HESSIAN_LIMIT,
    endpoint_families,
    extreme_values,
)
from src.experiments.radial_spectrum import expected_radial_spectrum
from src.experiments.random_maps import KINDS, random_small_map
from src.experiments.rational_rotation import plateau_samples
from src.hamiltonians import hessian_bound, radial_profile
from src.orchestrator import ExperimentContext


def reduced(**overrides):
    return ExperimentContext(seed=0, overrides=overrides)


class TestHelpers:
    """Tests for the pure helper functions."""

    def test_expected_radial_spectrum(self):
        assert expected_radial_spectrum(0.3, 0.0) == [0.0]
        assert expected_radial_spectrum(0.3, 1.0) == [0.0, 0.3]
        assert expected_radial_spectrum(-0.2, 0.5) == [-0.1, 0.0]

    def test_search_box(self):
        lower, upper = search_box(3.0, 2)
        assert upper.tolist() == [5.5] * 4
        assert lower.tolist() == [-5.5] * 4

    def test_extreme_values(self):
        lo, hi = extreme_values(radial_profile(0.3, 1.0))
        assert lo == 0.0
        assert hi == pytest.approx(0.3)

    def test_endpoint_families_are_compact(self):
        for label, H in endpoint_families():
            assert np.isfinite(H.support_radius), label

    def test_sign_changing_family(self):
        H = dict(endpoint_families())["sign_changing"]
        lo, hi = extreme_values(H)
        assert lo == pytest.approx(-0.03)
        assert hi == pytest.approx(0.05)

    def test_endpoint_families_have_small_hessian(self):
        for label, H in endpoint_families():
            corner = H.support_radius * np.ones(2)
            assert hessian_bound(H, -corner, corner, 41) <= HESSIAN_LIMIT, label

    def test_large_radial_profile_exceeds_hessian_limit(self):
        H = radial_profile(0.3, 2.5)
        corner = H.support_radius * np.ones(2)
        assert hessian_bound(H, -corner, corner, 41) > HESSIAN_LIMIT

    def test_plateau_samples_are_full_orbits(self):
        X = plateau_samples(5)
        assert np.all(np.linalg.norm(X[:, :2], axis=1) <= 0.25)
        assert len(np.unique(X[:, 2])) == 20

    def test_random_small_maps(self):
        rng = np.random.default_rng(5)
        kinds = {random_small_map(rng).kind for _ in range(12)}
        assert kinds <= set(KINDS)
        assert len(kinds) >= 2


class TestFastExperiments:
    """Experiments cheap enough to run at reduced size on every test run."""

    @pytest.mark.asyncio
    async def test_basis_change(self):
        report = await BasisChangeExperiment().run(reduced(samples=50))
        assert report.passed
        assert report.params["samples"] == 50

    @pytest.mark.asyncio
    async def test_squeeze_formula(self):
        ctx = reduced(a_list=[0.5], samples=100)
        report = await SqueezeFormulaExperiment().run(ctx)
        assert report.passed

    @pytest.mark.asyncio
    async def test_squeeze_formula_rejects_bad_radii(self):
        report = await SqueezeFormulaExperiment().run(reduced(r=2.0, R=1.0, samples=10))
        assert report.status == "failed"
        assert report.error.startswith("UsageError")


@pytest.mark.slow
class TestReducedRuns:
    """Reduced-size runs of the expensive experiments."""

    @pytest.mark.asyncio
    async def test_spectrum_bound(self):
        ctx = reduced(samples=3, points_per_axis=7, circle_points=4, mesh=0.1)
        report = await SpectrumBoundExperiment().run(ctx)
        assert report.passed

    @pytest.mark.asyncio
    async def test_lift_endpoints(self):
        ctx = reduced(points_per_axis=9, circle_points=4)
        report = await LiftEndpointsExperiment().run(ctx)
        assert report.status == "completed"
        assert any(m.name.startswith("zero_hamiltonian") for m in report.measurements)
        hessians = [m for m in report.measurements if m.name.startswith("hessian[")]
        assert len(hessians) == 5
        assert all(m.passed for m in hessians)

    @pytest.mark.asyncio
    async def test_rational_rotation(self):
        ctx = reduced(m=3, conjugator_samples=2)
        report = await RationalRotationExperiment().run(ctx)
        assert report.status == "completed"
        assert report.params["m"] == 3

    @pytest.mark.asyncio
    async def test_displacement_spectrum(self):
        report = await DisplacementSpectrumExperiment().run(reduced(points_per_axis=21))
        assert report.status == "completed"
        assert report.series

    @pytest.mark.asyncio
    async def test_rokhlin_demo(self):
        ctx = reduced(N=2, i=1, eps_list=[0.1], points_per_axis=5)
        report = await RokhlinDemoExperiment().run(ctx)
        assert report.status == "completed"

    @pytest.mark.asyncio
    async def test_co_vs_c0(self):
        report = await CoVsC0Experiment().run(reduced(k_list=[0, 2], mesh=0.1))
        assert report.status == "completed"

    @pytest.mark.asyncio
    async def test_contact_certificate(self):
        report = await ContactCertificateExperiment().run(reduced(samples=20))
        assert report.status == "completed"
        assert len(report.params["maps"]) == 8

    @pytest.mark.asyncio
    async def test_path_independence(self):
        ctx = reduced(maps=2, points_per_axis=7, circle_points=4)
        report = await PathIndependenceExperiment().run(ctx)
        assert report.status == "completed"
