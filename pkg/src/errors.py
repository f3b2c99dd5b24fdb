"""Exception hierarchy for the contact rigidity lab."""

from typing import Any, Dict, Optional

import numpy as np


class ContactLabError(Exception):
    """Base class for all errors raised by the toolkit."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": type(self).__name__,
            "message": self.message,
            "details": self.details,
        }


class UsageError(ContactLabError):
    """Invalid arguments: space mismatch, wrong space kind, bad parameters."""


class IntegrationError(ContactLabError):
    """The ODE solver could not advance (step-size underflow or singular field)."""

    def __init__(
        self,
        message: str,
        point: Optional[np.ndarray] = None,
        time: Optional[float] = None,
    ):
        details: Dict[str, Any] = {}
        if point is not None:
            details["point"] = [float(c) for c in np.asarray(point).ravel()]
        if time is not None:
            details["time"] = float(time)
        super().__init__(message, details)
        self.point = point
        self.time = time


class ConstructionError(ContactLabError):
    """A constructed map failed its verification sweep after all retries."""


class SupportLeakageError(ContactLabError):
    """A sup-norm sampling region did not contain the support of the maps."""
