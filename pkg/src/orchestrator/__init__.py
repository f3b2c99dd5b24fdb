"""Experiment orchestration: base classes, registry, runner and report models."""

from .base import BaseExperiment, VerificationExperiment
from .context import ExperimentContext
from .orchestrator import Orchestrator
from .registry import ExperimentRegistry
from .reports import ExperimentReport, Measurement, SuiteReport

__all__ = [
    "BaseExperiment",
    "VerificationExperiment",
    "ExperimentContext",
    "Orchestrator",
    "ExperimentRegistry",
    "ExperimentReport",
    "Measurement",
    "SuiteReport",
]
