"""Utility functions for the contact rigidity lab."""

from .file_utils import allowed_file, write_csv, write_text
from .grids import ball_samples, box_grid, circle_grid, fit_points_per_axis, with_circle
from .validation import (
    require_valid,
    validate_experiment_params,
    validate_report,
    validate_run_options,
)

__all__ = [
    "allowed_file",
    "write_csv",
    "write_text",
    "ball_samples",
    "box_grid",
    "circle_grid",
    "fit_points_per_axis",
    "with_circle",
    "require_valid",
    "validate_experiment_params",
    "validate_report",
    "validate_run_options",
]
