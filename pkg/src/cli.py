"""Command-line entry point: ``contact-lab <experiment> [options]``.

Exit codes: 0 when every measurement passes, 1 on any failed check or
failed experiment, 2 on usage errors.
"""

import argparse
import asyncio
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from .config import get_settings
from .errors import ContactLabError, UsageError
from .experiments import EXPERIMENTS, default_experiments
from .orchestrator import ExperimentContext, Orchestrator
from .orchestrator.reports import ExperimentReport, SuiteReport
from .utils.file_utils import allowed_file, write_csv, write_text
from .utils.validation import (
    collect_errors,
    require_valid,
    validate_experiment_params,
    validate_report,
    validate_run_options,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# Translated-point search grid flags shared by the spectrum experiments.
GRID_FLAGS = [
    ("--points-per-axis", "points_per_axis", int, None, "search grid per base axis"),
    ("--circle-points", "circle_points", int, None, "search grid on the circle"),
]

# Experiment flags: (flag, dest, type, nargs, help)
EXPERIMENT_FLAGS: Dict[str, List[tuple]] = {
    "spectrum-bound": [
        ("--samples", "samples", int, None, "number of random maps (default 100)"),
        *GRID_FLAGS,
    ],
    "lift-endpoints": GRID_FLAGS,
    "radial-spectrum": [
        ("--a", "a", float, None, "height of the radial profile (default 0.3)"),
        ("--t-list", "t_list", float, "+", "times (default 0 0.25 0.5 1)"),
        ("--r-max", "r_max", float, None, "support radius of the profile (default 1)"),
    ],
    "rational-rotation": [
        ("--m", "m", int, None, "plateau height is 1/m (default 5)"),
        (
            "--conjugator-samples",
            "conjugator_samples",
            int,
            None,
            "number of random conjugators (default 50)",
        ),
    ],
    "displacement-spectrum": [
        ("--a", "a", float, None, "height of the radial profile (default 0.3)"),
        ("--t", "t", float, None, "time of the first factor (default 1/3)"),
        ("--T", "T", float, None, "time of the conjugated factor (default 2/3)"),
        ("--shift", "shift", float, None, "translation length of psi (default 3)"),
    ],
    "rokhlin-demo": [
        ("--family", "family", str, None, "fragment family: squeeze, reeb or identity"),
        ("--N", "N", int, None, "truncation (default 3)"),
        ("--eps-list", "eps_list", float, "+", "eps values (default 0.1 0.05 0.025)"),
        ("--i", "i", int, None, "fragment to extract (default 2)"),
    ],
    "co-vs-c0": [
        ("--k-list", "k_list", float, "+", "translation lengths (default 0 1 2 4 8)"),
    ],
    "contact-certificate": [
        ("--samples", "samples", int, None, "points per map (default 1000)"),
    ],
    "squeeze-formula": [
        ("--a-list", "a_list", float, "+", "squeeze factors (default 1 0.5 0.1)"),
        ("--r", "r", float, None, "inner radius (default 1)"),
        ("--R", "R", float, None, "outer radius (default 2)"),
    ],
    "path-independence": [
        ("--maps", "maps", int, None, "number of random maps (default 10)"),
    ],
    "basis-change": [
        ("--samples", "samples", int, None, "points per space (default 1000)"),
        ("--radius", "radius", float, None, "sampling radius (default 2)"),
    ],
}

POSITIVE = (
    "samples",
    "points_per_axis",
    "circle_points",
    "r_max",
    "m",
    "conjugator_samples",
    "N",
    "i",
    "r",
    "R",
    "maps",
    "radius",
)
UNIT_INTERVAL = ("a_list", "eps_list")


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--seed", type=int, default=None, help="random seed (default CONTACT_SEED or 0)"
    )
    common.add_argument(
        "--out", default=None, help="write the JSON report here instead of stdout"
    )
    common.add_argument(
        "--csv", default=None, help="write the experiment series as CSV"
    )
    common.add_argument(
        "--mesh", type=float, default=None, help="grid spacing for sup estimates"
    )
    common.add_argument(
        "--tol",
        type=float,
        default=None,
        help="absolute integrator tolerance (relative is 10x)",
    )
    common.add_argument(
        "--n", type=int, default=None, help="half-dimension of the base (default 1)"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="contact-lab",
        description="Numerical verification experiments for contact Hamiltonian "
        "dynamics.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, flags in EXPERIMENT_FLAGS.items():
        sub = subparsers.add_parser(
            name,
            parents=[common],
            help=EXPERIMENTS[name].description,
            allow_abbrev=False,
        )
        for flag, dest, kind, nargs, text in flags:
            sub.add_argument(
                flag, dest=dest, type=kind, nargs=nargs, default=None, help=text
            )
    suite = subparsers.add_parser(
        "verify-all", parents=[common], help="run every experiment"
    )
    suite.add_argument(
        "--only",
        nargs="+",
        default=None,
        choices=sorted(EXPERIMENTS),
        help="run a subset",
    )
    return parser


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    flags = EXPERIMENT_FLAGS.get(args.command, [])
    values = {dest: getattr(args, dest) for _, dest, _, _, _ in flags}
    return {k: v for k, v in values.items() if v is not None}


def build_context(args: argparse.Namespace) -> ExperimentContext:
    """Validate the shared options and the experiment flags; raises ``UsageError``."""
    options = {"seed": args.seed, "mesh": args.mesh, "tol": args.tol, "n": args.n}
    overrides = _overrides(args)
    errors = collect_errors(
        validate_run_options(options),
        validate_experiment_params(
            overrides,
            positive=[k for k in POSITIVE if k in overrides],
            unit_interval=[k for k in UNIT_INTERVAL if k in overrides],
        ),
    )
    for path in (args.out, args.csv):
        if path is not None and not allowed_file(path):
            errors.append(f"output path {path} must end in .json or .csv")
    require_valid({"valid": not errors, "errors": errors})
    fields = {k: v for k, v in options.items() if v is not None}
    return ExperimentContext(overrides=overrides, **fields)


def _emit(payload: Dict[str, Any], out: Optional[str]) -> None:
    text = json.dumps(payload, indent=2)
    if out:
        write_text(out, text)
    else:
        sys.stdout.write(text + "\n")


def _series_rows(reports: Sequence[ExperimentReport]) -> List[Dict[str, Any]]:
    rows = []
    for report in reports:
        for row in report.series:
            rows.append({"experiment": report.id, **row})
    return rows


def _schema_errors(reports: Sequence[ExperimentReport]) -> List[str]:
    errors = []
    for report in reports:
        result = validate_report(report.to_json_dict())
        errors.extend(f"{report.id}: {error}" for error in result["errors"])
    return errors


async def _run(args: argparse.Namespace, context: ExperimentContext):
    orchestrator = Orchestrator(default_experiments())
    if args.command == "verify-all":
        return await orchestrator.execute_suite(args.only, context)
    return await orchestrator.execute(args.command, context)


def main(argv: Optional[Sequence[str]] = None) -> int:
    settings = get_settings()
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper(), logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        context = build_context(args)
        result = asyncio.run(_run(args, context))
    except UsageError as e:
        logger.error(f"Usage error: {e.message}")
        sys.stderr.write(f"contact-lab: error: {e.message}\n")
        return EXIT_USAGE
    except ContactLabError as e:
        logger.error(f"Run aborted: {e.to_dict()}")
        return EXIT_FAILED

    reports = result.experiments if isinstance(result, SuiteReport) else [result]
    _emit(result.to_json_dict(), args.out)
    if args.csv:
        write_csv(args.csv, _series_rows(reports))
    for report in reports:
        status = "PASS" if report.passed else "FAIL"
        logger.info(f"{report.id}: {status} ({report.runtime_seconds:.1f}s)")
    schema_errors = _schema_errors(reports)
    if schema_errors:
        logger.error(f"Report does not match the schema: {'; '.join(schema_errors)}")
        return EXIT_FAILED
    return EXIT_OK if result.passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
