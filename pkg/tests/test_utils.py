"""Tests for validation helpers, sample grids and output files."""

import csv

import numpy as np
import pytest

from src.errors import UsageError
from src.utils import (
    allowed_file,
    ball_samples,
    box_grid,
    circle_grid,
    fit_points_per_axis,
    require_valid,
    validate_experiment_params,
    validate_report,
    validate_run_options,
    with_circle,
    write_csv,
    write_text,
)
from src.utils.validation import collect_errors


class TestRunOptions:
    """Tests for validate_run_options."""

    def test_valid_options(self):
        result = validate_run_options({"seed": 7, "mesh": 0.02, "tol": 1e-8, "n": 2})
        assert result["valid"]
        assert result["errors"] == []

    def test_missing_options_are_fine(self):
        assert validate_run_options({})["valid"]

    @pytest.mark.parametrize(
        "options",
        [
            {"seed": -1},
            {"seed": 1.5},
            {"mesh": 0.0},
            {"tol": float("nan")},
            {"mesh": float("inf")},
            {"tol": True},
            {"n": 0},
        ],
    )
    def test_invalid_options(self, options):
        result = validate_run_options(options)
        assert not result["valid"]
        assert len(result["errors"]) == 1

    def test_errors_accumulate(self):
        result = validate_run_options({"seed": -1, "mesh": -0.1, "n": 0})
        assert len(result["errors"]) == 3


class TestExperimentParams:
    """Tests for validate_experiment_params."""

    def test_positive_lists(self):
        params = {"a_list": [0.5, 0.25], "t": 1.0}
        assert validate_experiment_params(params, positive=["a_list", "t"])["valid"]
        params["a_list"].append(-0.1)
        assert not validate_experiment_params(params, positive=["a_list"])["valid"]

    @pytest.mark.parametrize(
        "eps,valid", [(1.0, True), (0.0, False), (1.5, False), (True, False)]
    )
    def test_unit_interval(self, eps, valid):
        result = validate_experiment_params({"eps": eps}, unit_interval=["eps"])
        assert result["valid"] is valid

    def test_missing_positive_is_error(self):
        result = validate_experiment_params({}, positive=["radius"])
        assert result["errors"] == ["radius must be positive"]

    def test_non_empty(self):
        result = validate_experiment_params({"t_list": []}, non_empty=["t_list"])
        assert not result["valid"]

    def test_collect_errors(self):
        errors = collect_errors(
            validate_run_options({"n": 0}),
            validate_experiment_params({"eps": 2.0}, unit_interval=["eps"]),
        )
        assert errors == ["n must be a positive integer", "eps must lie in (0, 1]"]


class TestReportValidation:
    """Tests for validate_report and require_valid."""

    def test_complete_report(self):
        report = {
            "id": "x",
            "paper_anchor": "a",
            "params": {},
            "measurements": [
                {"name": "m", "value": 1.0, "tolerance": 0.1, "pass": True}
            ],
            "runtime_seconds": 0.1,
            "seed": 0,
        }
        assert validate_report(report)["valid"]

    def test_missing_fields(self):
        result = validate_report({"id": "x", "measurements": [{"name": "m"}]})
        assert not result["valid"]
        assert "paper_anchor field is required" in result["errors"]
        assert "measurement 0 is missing value, tolerance, pass" in result["errors"]

    def test_measurements_must_be_list(self):
        result = validate_report({"measurements": "nope"})
        assert "measurements must be a list" in result["errors"]

    def test_require_valid_raises(self):
        with pytest.raises(UsageError) as info:
            require_valid(validate_run_options({"n": 0}), "radial-spectrum")
        assert info.value.message == "radial-spectrum: n must be a positive integer"
        assert info.value.details == {"errors": ["n must be a positive integer"]}

    def test_require_valid_passes(self):
        require_valid(validate_run_options({"n": 1}))


class TestGrids:
    """Tests for the sample grid helpers."""

    def test_fit_points_per_axis(self):
        assert fit_points_per_axis(41, 2, None) == 41
        assert fit_points_per_axis(41, 2, 10_000) == 41
        assert fit_points_per_axis(41, 3, 500) == 7

    def test_box_grid_includes_faces(self):
        grid = box_grid([-1.0, 0.0], [1.0, 2.0], 5)
        assert grid.shape == (25, 2)
        assert np.allclose(grid.min(axis=0), [-1.0, 0.0])
        assert np.allclose(grid.max(axis=0), [1.0, 2.0])

    def test_box_grid_respects_cap(self):
        grid = box_grid([0.0] * 3, [1.0] * 3, 41, max_points=500)
        assert grid.shape == (343, 3)

    def test_box_grid_bad_bounds(self):
        with pytest.raises(UsageError):
            box_grid([1.0], [0.0], 5)
        with pytest.raises(UsageError):
            box_grid([0.0, 0.0], [1.0], 5)

    def test_circle_grid(self):
        thetas = circle_grid(4, offset=0.75)
        assert np.allclose(thetas, [0.75, 0.0, 0.25, 0.5])
        with pytest.raises(UsageError):
            circle_grid(0)

    def test_with_circle(self):
        points = with_circle(np.array([[0.0, 1.0], [2.0, 3.0]]), np.array([0.0, 0.5]))
        assert points.shape == (4, 3)
        assert np.allclose(points[1], [0.0, 1.0, 0.5])
        assert np.allclose(points[2], [2.0, 3.0, 0.0])

    def test_ball_samples_shell(self, rng):
        center = np.array([1.0, 0.0, 0.0])
        X = ball_samples(rng, 500, 3, 0.5, center, inner_radius=0.4)
        radii = np.linalg.norm(X - center, axis=1)
        assert X.shape == (500, 3)
        assert np.all(radii >= 0.4 - 1e-12)
        assert np.all(radii <= 0.5 + 1e-12)

    @pytest.mark.parametrize("radius,inner", [(0.0, 0.0), (1.0, 1.0), (1.0, -0.1)])
    def test_ball_samples_invalid(self, rng, radius, inner):
        with pytest.raises(UsageError):
            ball_samples(rng, 10, 2, radius, inner_radius=inner)


class TestFileUtils:
    """Tests for output file helpers."""

    @pytest.mark.parametrize(
        "name,expected",
        [
            ("report.json", True),
            ("series.CSV", True),
            ("out.txt", False),
            ("noext", False),
        ],
    )
    def test_allowed_file(self, name, expected):
        assert allowed_file(name) is expected

    def test_write_text_appends_newline(self, tmp_path):
        path = tmp_path / "nested" / "report.json"
        write_text(str(path), "{}")
        assert path.read_text(encoding="utf-8") == "{}\n"

    def test_write_csv_header_union(self, tmp_path):
        path = tmp_path / "series.csv"
        write_csv(str(path), [{"a": 1}, {"b": 2, "a": 3}])
        with open(path, newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
        assert rows == [["a", "b"], ["1", ""], ["3", "2"]]
