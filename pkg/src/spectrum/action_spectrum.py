"""Action spectra: clustered action values with multiplicities and witnesses."""

from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..config import get_settings


@dataclass(frozen=True)
class ActionSpectrum:
    """Sorted cluster values, pairwise more than ``cluster_tol`` apart."""

    values: Tuple[float, ...]
    multiplicity: Tuple[int, ...]
    cluster_tol: float
    witnesses: Tuple[np.ndarray, ...] = field(default=(), repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[float]:
        return iter(self.values)

    @property
    def max_abs(self) -> float:
        return max((abs(v) for v in self.values), default=0.0)

    def contains(self, value: float, tol: Optional[float] = None) -> bool:
        tol = self.cluster_tol if tol is None else tol
        return any(abs(v - value) <= tol for v in self.values)

    def deviation_from(self, expected: Sequence[float]) -> float:
        """Hausdorff distance between the clusters and ``expected``."""
        if not self.values or not expected:
            return float("inf")
        ours = np.asarray(self.values)
        theirs = np.asarray(sorted(expected))
        to_theirs = np.max(np.min(np.abs(ours[:, None] - theirs[None, :]), axis=1))
        to_ours = np.max(np.min(np.abs(theirs[:, None] - ours[None, :]), axis=1))
        return float(max(to_theirs, to_ours))

    def matches(self, expected: Sequence[float], tol: float) -> bool:
        """One cluster per distinct ``expected`` value, each within ``tol``."""
        distinct = cluster_values(list(expected), self.cluster_tol)
        if len(distinct) != len(self.values):
            return False
        return self.deviation_from(distinct) <= tol

    def as_dict(self) -> dict:
        return {
            "values": [float(v) for v in self.values],
            "multiplicity": [int(m) for m in self.multiplicity],
            "cluster_tol": self.cluster_tol,
        }


def cluster_values(values: List[float], tol: float) -> List[float]:
    return list(cluster_actions(values, tol=tol).values)


def cluster_actions(
    actions: Sequence[float],
    witnesses: Optional[np.ndarray] = None,
    tol: Optional[float] = None,
) -> ActionSpectrum:
    """Single-linkage clustering on the line.

    A gap larger than ``tol`` starts a new cluster.

    Cluster values are means, so neighbouring clusters stay more than ``tol`` apart.
    """
    tol = get_settings().cluster_tol if tol is None else tol
    actions = np.asarray(actions, dtype=float).reshape(-1)
    if actions.size == 0:
        return ActionSpectrum((), (), tol)
    order = np.argsort(actions, kind="stable")
    sorted_actions = actions[order]
    breaks = np.flatnonzero(np.diff(sorted_actions) > tol) + 1
    groups = np.split(np.arange(actions.size), breaks)
    values = tuple(float(np.mean(sorted_actions[g])) for g in groups)
    multiplicity = tuple(len(g) for g in groups)
    found: Tuple[np.ndarray, ...] = ()
    if witnesses is not None:
        witnesses = np.asarray(witnesses)
        found = tuple(witnesses[order[g]] for g in groups)
    return ActionSpectrum(values, multiplicity, tol, found)
