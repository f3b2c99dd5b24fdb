"""Validation helpers for experiment parameters and reports."""

import logging
import math
from typing import Any, Dict, Iterable, List, Optional

from ..errors import UsageError

logger = logging.getLogger(__name__)


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)

REPORT_FIELDS = (
    "id",
    "paper_anchor",
    "params",
    "measurements",
    "runtime_seconds",
    "seed",
)
MEASUREMENT_FIELDS = ("name", "value", "tolerance", "pass")


def validate_run_options(options: Dict[str, Any]) -> Dict[str, Any]:
    """Validate the options shared by all experiments (seed, mesh, tol, n)."""
    errors = []

    seed = options.get("seed")
    if seed is not None and (not isinstance(seed, int) or seed < 0 or seed >= 2 ** 64):
        errors.append("seed must be an integer in [0, 2^64)")

    for key in ("mesh", "tol"):
        value = options.get(key)
        if value is None:
            continue
        if not _is_number(value) or not math.isfinite(value) or value <= 0:
            errors.append(f"{key} must be a positive finite number")

    n = options.get("n")
    if n is not None and (not isinstance(n, int) or n < 1):
        errors.append("n must be a positive integer")

    return {
        "valid": len(errors) == 0,
        "errors": errors,
        "options": options,
    }


def validate_experiment_params(
    params: Dict[str, Any],
    positive: Iterable[str] = (),
    unit_interval: Iterable[str] = (),
    non_empty: Iterable[str] = (),
) -> Dict[str, Any]:
    """Check positive numbers, numbers in ``(0, 1]`` and non-empty lists by name."""
    errors = []

    for key in positive:
        value = params.get(key)
        values = value if isinstance(value, (list, tuple)) else [value]
        if any(not _is_number(v) or v <= 0 for v in values):
            errors.append(f"{key} must be positive")

    for key in unit_interval:
        value = params.get(key)
        values = value if isinstance(value, (list, tuple)) else [value]
        if any(not _is_number(v) or not 0 < v <= 1 for v in values):
            errors.append(f"{key} must lie in (0, 1]")

    for key in non_empty:
        if not params.get(key):
            errors.append(f"{key} must not be empty")

    return {
        "valid": len(errors) == 0,
        "errors": errors,
        "params": params,
    }


def validate_report(report: Dict[str, Any]) -> Dict[str, Any]:
    """Check a serialized experiment report against the documented schema."""
    errors = []

    for key in REPORT_FIELDS:
        if key not in report:
            errors.append(f"{key} field is required")

    measurements = report.get("measurements", [])
    if not isinstance(measurements, list):
        errors.append("measurements must be a list")
        measurements = []
    for i, m in enumerate(measurements):
        missing = [k for k in MEASUREMENT_FIELDS if k not in m]
        if missing:
            errors.append(f"measurement {i} is missing {', '.join(missing)}")

    return {
        "valid": len(errors) == 0,
        "errors": errors,
        "report": report,
    }


def require_valid(result: Dict[str, Any], context: Optional[str] = None) -> None:
    """Raise ``UsageError`` listing every collected error."""
    if result["valid"]:
        return
    prefix = f"{context}: " if context else ""
    message = prefix + "; ".join(result["errors"])
    logger.warning(f"Validation failed: {message}")
    raise UsageError(message, {"errors": list(result["errors"])})


def collect_errors(*results: Dict[str, Any]) -> List[str]:
    errors: List[str] = []
    for result in results:
        errors.extend(result.get("errors", []))
    return errors
