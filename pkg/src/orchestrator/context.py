"""Run options shared by every experiment."""

from typing import Any, Dict, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..config import get_settings
from ..flows.isotopy import Tolerance


class ExperimentContext(BaseModel):
    """Seed, sampling mesh, integrator tolerance, dimension and overrides."""

    model_config = ConfigDict(frozen=True)

    seed: int = Field(default_factory=lambda: get_settings().seed, ge=0)
    mesh: Optional[float] = Field(default=None, gt=0)
    tol: Optional[float] = Field(default=None, gt=0)
    n: int = Field(default_factory=lambda: get_settings().n, ge=1)
    overrides: Dict[str, Any] = Field(default_factory=dict)

    def rng(self, stream: int = 0) -> np.random.Generator:
        """Independent generator per stream, reproducible from the seed."""
        return np.random.default_rng([self.seed, stream])

    def tolerance(self) -> Tolerance:
        if self.tol is None:
            return Tolerance.default()
        return Tolerance.from_atol(self.tol)

    def param(self, key: str, default: Any) -> Any:
        value = self.overrides.get(key)
        return default if value is None else value
