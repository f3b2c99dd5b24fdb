"""Base experiment class for all verification experiments."""

import asyncio
import logging
import time
from abc import ABC, abstractmethod
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional

from ..errors import ContactLabError, IntegrationError
from .context import ExperimentContext
from .reports import ExperimentReport, Measurement

logger = logging.getLogger(__name__)


class BaseExperiment(ABC):
    """Base class for all experiments.

    Subclasses declare ``name``, ``anchor`` and ``claim`` and implement :meth:`analyze`,
    returning ``{"params": ..., "measurements": [...], "series": [...]}``.
    :meth:`run` adds timing, bookkeeping and error handling and turns the
    outcome into an :class:`ExperimentReport`.
    """

    name: str = "experiment"
    anchor: str = ""
    claim: str = ""
    description: str = ""

    def __init__(self):
        self.status = "idle"
        self.last_run: Optional[Dict[str, Any]] = None
        self.run_count = 0
        self.success_count = 0
        self.error_count = 0
        self.session_id: Optional[str] = None
        self.execution_log: List[Dict[str, Any]] = []

    def _start_session(self, seed: int) -> str:
        stamp = datetime.now(timezone.utc).strftime("%Y%m%d%H%M%S")
        self.session_id = f"{self.name}_seed{seed}_{stamp}"
        self._log("session_start", f"Starting session {self.session_id}")
        return self.session_id

    def _log(self, event: str, details: Any):
        """Record an event in the execution log and mirror it to the module logger."""
        entry = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "experiment": self.name,
            "session_id": self.session_id,
            "event": event,
            "details": details,
        }
        self.execution_log.append(entry)
        logger.info(f"[{self.name}] {event}: {details}")

    def get_execution_log(
        self, session_id: Optional[str] = None
    ) -> List[Dict[str, Any]]:
        if session_id:
            return [e for e in self.execution_log if e.get("session_id") == session_id]
        return self.execution_log

    @abstractmethod
    async def analyze(self, context: ExperimentContext) -> Dict[str, Any]:
        """Compute the experiment's measurements."""
        pass

    async def run(self, context: ExperimentContext) -> ExperimentReport:
        """Run the experiment with error handling.

        Only ``IntegrationError`` propagates, so the orchestrator can retry.
        """
        self.status = "running"
        self.run_count += 1
        start = time.perf_counter()
        session_id = self._start_session(context.seed)

        try:
            result = await self.analyze(context)
            runtime = time.perf_counter() - start
            report = ExperimentReport(
                id=self.name,
                anchor=self.anchor,
                claim=self.claim,
                params=result.get("params", {}),
                measurements=result.get("measurements", []),
                runtime_seconds=round(runtime, 3),
                seed=context.seed,
                series=result.get("series", []),
            )
            self.status = "completed"
            self.success_count += 1
            failed = [m.name for m in report.measurements if not m.passed]
            self._log(
                "run_completed",
                f"{len(report.measurements)} measurements, {len(failed)} failed "
                f"in {runtime:.2f}s",
            )
            if failed:
                logger.warning(
                    f"Experiment {self.name} failed checks: {', '.join(failed)}"
                )
        except IntegrationError:
            self.status = "failed"
            self.error_count += 1
            self._log("run_failed", "integration error")
            raise
        except ContactLabError as e:
            report = self._failed_report(context, start, e.message, type(e).__name__)
        except Exception as e:
            logger.exception(f"Experiment {self.name} crashed")
            report = self._failed_report(context, start, str(e), type(e).__name__)

        report.execution_log = self.get_execution_log(session_id)
        self.last_run = {
            "session_id": session_id,
            "success": report.status == "completed",
            "passed": report.passed,
            "runtime_seconds": report.runtime_seconds,
        }
        return report

    def _failed_report(
        self, context: ExperimentContext, start: float, message: str, kind: str
    ) -> ExperimentReport:
        self.status = "failed"
        self.error_count += 1
        self._log("run_failed", f"{kind}: {message}")
        logger.error(f"Experiment {self.name} failed: {message}")
        return ExperimentReport(
            id=self.name,
            anchor=self.anchor,
            claim=self.claim,
            runtime_seconds=round(time.perf_counter() - start, 3),
            seed=context.seed,
            status="failed",
            error=f"{kind}: {message}",
        )

    def get_stats(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "status": self.status,
            "run_count": self.run_count,
            "success_count": self.success_count,
            "error_count": self.error_count,
            "last_run": self.last_run,
        }


class VerificationExperiment(BaseExperiment):
    """Experiment whose numerical work is synchronous and runs in a worker thread."""

    async def analyze(self, context: ExperimentContext) -> Dict[str, Any]:
        return await asyncio.to_thread(self.compute, context)

    @abstractmethod
    def compute(self, context: ExperimentContext) -> Dict[str, Any]:
        pass

    @staticmethod
    def at_most(name: str, value: float, tolerance: float) -> Measurement:
        """Pass when ``value <= tolerance``."""
        return _measure(name, value, tolerance, value <= tolerance)

    @staticmethod
    def at_least(name: str, value: float, threshold: float) -> Measurement:
        """Pass when ``value >= threshold``."""
        return _measure(name, value, threshold, value >= threshold)

    @staticmethod
    def below(name: str, value: float, bound: float) -> Measurement:
        """Pass when ``value < bound`` strictly."""
        return _measure(name, value, bound, value < bound)

    @staticmethod
    def equals(name: str, value: float, expected: float) -> Measurement:
        return _measure(name, value, expected, value == expected)


def _measure(name: str, value: float, tolerance: float, passed: bool) -> Measurement:
    return Measurement(
        name=name, value=float(value), tolerance=float(tolerance), passed=bool(passed)
    )
