"""Report models for experiments and suites."""

from datetime import datetime, timezone
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field


class Measurement(BaseModel):
    """One measured value checked against a declared tolerance."""

    model_config = ConfigDict(populate_by_name=True)

    name: str
    value: float
    tolerance: float
    passed: bool = Field(alias="pass")


class ExperimentReport(BaseModel):
    """One experiment run.

    Serialized as ``{id, paper_anchor, params, measurements, runtime_seconds,
    seed}``; ``claim``, ``status`` and ``error`` (when set) are written alongside.
    """

    model_config = ConfigDict(populate_by_name=True)

    id: str
    anchor: str = Field(alias="paper_anchor", min_length=1)
    claim: str = ""
    params: Dict[str, Any] = Field(default_factory=dict)
    measurements: List[Measurement] = Field(default_factory=list)
    runtime_seconds: float = 0.0
    seed: int = 0
    status: str = "completed"
    error: Optional[str] = None
    series: List[Dict[str, Any]] = Field(default_factory=list, exclude=True)
    execution_log: List[Dict[str, Any]] = Field(default_factory=list, exclude=True)

    @property
    def passed(self) -> bool:
        return self.status == "completed" and all(m.passed for m in self.measurements)

    def to_json_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True, exclude_none=True)


class SuiteReport(BaseModel):
    generated_at: str = Field(
        default_factory=lambda: datetime.now(timezone.utc).isoformat()
    )
    experiments: List[ExperimentReport] = Field(default_factory=list)
    summary: Dict[str, int] = Field(default_factory=dict)
    overall_status: str = "pass"

    @property
    def passed(self) -> bool:
        return self.overall_status == "pass"

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "generated_at": self.generated_at,
            "summary": self.summary,
            "overall_status": self.overall_status,
            "experiments": [e.to_json_dict() for e in self.experiments],
        }
