"""Experiment registry."""

import logging
from typing import Dict, List, Optional

from .base import BaseExperiment

logger = logging.getLogger(__name__)


class ExperimentRegistry:
    """Registry of experiment instances, keyed by experiment id."""

    def __init__(self):
        self._experiments: Dict[str, BaseExperiment] = {}

    def register(self, experiment: BaseExperiment) -> bool:
        if experiment.name in self._experiments:
            logger.warning(f"Experiment {experiment.name} registered twice, replacing")
        self._experiments[experiment.name] = experiment
        logger.debug(f"Registered experiment instance: {experiment.name}")
        return True

    def get(self, name: str) -> Optional[BaseExperiment]:
        return self._experiments.get(name)

    def get_all(self) -> List[BaseExperiment]:
        return list(self._experiments.values())

    def list_experiments(self) -> List[str]:
        return list(self._experiments.keys())

    def unregister(self, name: str) -> bool:
        if name in self._experiments:
            del self._experiments[name]
            logger.info(f"Unregistered experiment: {name}")
            return True
        return False
