"""Runs experiments concurrently and compiles the suite report."""

import asyncio
import logging
from typing import Any, Dict, Iterable, List, Optional

from ..config import get_settings
from ..errors import IntegrationError, UsageError
from .base import BaseExperiment
from .context import ExperimentContext
from .registry import ExperimentRegistry
from .reports import ExperimentReport, SuiteReport

logger = logging.getLogger(__name__)


class Orchestrator:
    """Executes registered experiments with bounded concurrency.

    Integration failures are retried up to ``retry_count`` times.
    """

    def __init__(self, experiments: Optional[Iterable[BaseExperiment]] = None):
        self.registry = ExperimentRegistry()
        self.config = self._load_config()
        for experiment in experiments or []:
            self.register(experiment)

    def _load_config(self) -> Dict[str, Any]:
        settings = get_settings()
        return {
            "max_concurrent_experiments": settings.max_concurrent_experiments,
            "retry_count": settings.retry_count,
        }

    def register(self, experiment: BaseExperiment) -> bool:
        return self.registry.register(experiment)

    async def execute(self, name: str, context: ExperimentContext) -> ExperimentReport:
        experiment = self.registry.get(name)
        if experiment is None:
            known = ", ".join(self.registry.list_experiments())
            raise UsageError(f"unknown experiment '{name}'; known: {known}")
        return await self._execute_with_retry(experiment, context)

    async def execute_suite(
        self, names: Optional[List[str]], context: ExperimentContext
    ) -> SuiteReport:
        """Run ``names`` (default: everything registered) and compile a suite report."""
        names = names or self.registry.list_experiments()
        unknown = [n for n in names if self.registry.get(n) is None]
        if unknown:
            raise UsageError(f"unknown experiments: {', '.join(unknown)}")
        logger.info(f"Starting suite of {len(names)} experiments, seed {context.seed}")

        semaphore = asyncio.Semaphore(self.config["max_concurrent_experiments"])

        async def bounded(name: str) -> ExperimentReport:
            async with semaphore:
                return await self.execute(name, context)

        reports = await asyncio.gather(*(bounded(n) for n in names))
        suite = self._compile_report(list(reports))
        logger.info(f"Suite finished: {suite.summary}")
        return suite

    async def _execute_with_retry(
        self, experiment: BaseExperiment, context: ExperimentContext
    ) -> ExperimentReport:
        attempts = self.config["retry_count"]
        for attempt in range(attempts):
            try:
                return await experiment.run(context)
            except IntegrationError as e:
                logger.warning(
                    f"Experiment {experiment.name} attempt {attempt + 1} "
                    f"hit an integration error: {e.message}"
                )
                if attempt == attempts - 1:
                    return ExperimentReport(
                        id=experiment.name,
                        anchor=experiment.anchor,
                        claim=experiment.claim,
                        seed=context.seed,
                        status="failed",
                        error=f"IntegrationError: {e.message}",
                    )
        raise AssertionError("unreachable")

    def _compile_report(self, reports: List[ExperimentReport]) -> SuiteReport:
        summary = {"total": len(reports), "passed": 0, "failed": 0}
        for report in reports:
            if report.passed:
                summary["passed"] += 1
            else:
                summary["failed"] += 1
        return SuiteReport(
            experiments=reports,
            summary=summary,
            overall_status="pass" if summary["failed"] == 0 else "fail",
        )

    def get_stats(self) -> Dict[str, Dict[str, Any]]:
        return {e.name: e.get_stats() for e in self.registry.get_all()}
