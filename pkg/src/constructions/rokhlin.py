"""Infinite products of disjointly supported contactomorphisms.

Also the extraction of one factor from such a product.

Given maps ``f_1, f_2, ...`` supported in balls around the origin, each
``f_i`` is squeezed into ``B(0.9 * 2^-i)`` and translated to the centre
``(2 - 3/2^i, 0, ...)``. The resulting fragments have disjoint supports
inside ``B(2)``, so their (truncated) product ``g`` is well defined. A
single fragment is recovered, up to ``2 eps`` in the C^0 distance, by
pushing it out of ``B(4)`` along the Reeb direction and then squeezing
the rest of ``g`` into ``B(eps)``.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import ConstructionError, UsageError
from ..flows.isotopy import Tolerance
from ..flows.maps import Composite, FlowMap, compose, conjugate, identity_map
from ..geometry.spaces import Space
from ..utils.grids import ball_samples
from .squeeze import SqueezeMap, squeeze
from .translations import cutoff_translation, reeb_push

logger = logging.getLogger(__name__)

SUPPORT_TOL = 1e-6


def fragment_center(i: int) -> float:
    return 2.0 - 3.0 / 2 ** i


def fragment_radius(i: int) -> float:
    return 2.0 ** -i


def fragment_strip(i: int) -> Tuple[float, float]:
    """The ``x_1``-strip ``(2 - 1/2^{i-2}, 2 - 1/2^{i-1})`` of fragment ``i``."""
    return 2.0 - 1.0 / 2 ** (i - 2), 2.0 - 1.0 / 2 ** (i - 1)


@dataclass
class RokhlinElement:
    """The truncated product ``g = fragments[0] o ... o fragments[N-1]``."""

    fragments: List[FlowMap]
    composite: Composite
    truncation: int
    squeeze_factors: List[float]
    radii: List[float]
    conjugators: List[FlowMap] = field(repr=False)

    @property
    def space(self) -> Space:
        return self.composite.space

    def center(self, i: int) -> np.ndarray:
        c = np.zeros(self.space.dimension)
        c[0] = fragment_center(i)
        return c


def _place(
    f: FlowMap, i: int, tolerance: Optional[Tolerance]
) -> Tuple[FlowMap, float, float]:
    """Conjugator ``T'_{c_i} o psi_i`` moving ``supp f`` into ``B(c_i e_1, 0.9r_i)``."""
    s = f.support_radius
    if not math.isfinite(s) or s <= 0:
        raise UsageError(
            f"fragment {i} needs a finite positive support radius, got {s}"
        )
    r_i = fragment_radius(i)
    a = min(1.0, 0.9 * r_i / s)
    factors: List[FlowMap] = []
    shift = fragment_center(i)
    factors.append(
        cutoff_translation(shift, r_i, shift + r_i + 1.0, f.space, tolerance)
    )
    if a < 1.0:
        factors.append(squeeze(a, s, 1.5 * s, f.space.n, tolerance).map)
    return compose(*factors), a, a * s


def rokhlin_element(
    fs: Sequence[FlowMap],
    N: Optional[int] = None,
    tolerance: Optional[Tolerance] = None,
    verify_samples: int = 200,
) -> RokhlinElement:
    """Build the truncated infinite product of the first ``N`` maps in ``fs``."""
    fs = list(fs)
    N = len(fs) if N is None else N
    if N < 1 or N > len(fs):
        raise UsageError(f"truncation must lie in [1, {len(fs)}], got {N}")
    space = fs[0].space
    if space != Space.euclidean(space.n):
        raise UsageError(f"Rokhlin elements are built on R^(2n+1), got {space}")
    fragments: List[FlowMap] = []
    conjugators: List[FlowMap] = []
    factors: List[float] = []
    radii: List[float] = []
    for i, f in enumerate(fs[:N], start=1):
        phi, a, radius = _place(f, i, tolerance)
        frag = conjugate(f, phi)
        frag.label = f"fragment[{i}]"
        _verify_fragment(frag, i, radius, verify_samples)
        fragments.append(frag)
        conjugators.append(phi)
        factors.append(a)
        radii.append(radius)
        logger.info(
            f"Fragment {i}: squeeze {a:.4f}, radius {radius:.4f}, "
            f"centre {fragment_center(i):.4f}"
        )
    composite = Composite(fragments, label=f"g[N={N}]", support_radius=2.0)
    return RokhlinElement(fragments, composite, N, factors, radii, conjugators)


def _verify_fragment(frag: FlowMap, i: int, radius: float, samples: int) -> None:
    """Points just outside the fragment's ball must be fixed."""
    if samples == 0:
        return
    space = frag.space
    d = space.dimension
    rng = np.random.default_rng(i)
    center = np.zeros(d)
    center[0] = fragment_center(i)
    outer = min(fragment_radius(i), 1.05 * radius + 0.05 * fragment_radius(i))
    X = ball_samples(rng, samples, d, outer, center, inner_radius=radius)
    error = float(np.max(np.linalg.norm(frag.apply(X) - X, axis=1)))
    frag.support_radius = min(frag.support_radius, abs(center[0]) + radius)
    if error >= SUPPORT_TOL:
        raise ConstructionError(
            f"fragment {i} moves points outside its ball by {error:.2e}",
            {"fragment": i, "error": error},
        )


@dataclass
class RokhlinExtraction:
    """Approximant ``Psi_eps o Phi' o g o Phi'^-1 o Psi_eps^-1``.

    It approximates the pushed fragment ``target``.
    """

    approximant: Composite
    target: Composite
    bound: float
    eps: float
    index: int
    push: FlowMap
    squeeze: SqueezeMap
    target_center: np.ndarray
    target_radius: float

    def regions(self) -> Dict[str, Tuple[np.ndarray, np.ndarray]]:
        """Boxes outside of which approximant and target are both the identity."""
        d = self.target_center.size
        eps_box = (-self.eps * np.ones(d), self.eps * np.ones(d))
        half = self.target_radius * 1.05
        target_box = (self.target_center - half, self.target_center + half)
        return {"shrunk_rest": eps_box, "pushed_fragment": target_box}


def rokhlin_extract(
    g: RokhlinElement,
    i: int,
    eps: float,
    push_time: float = 5.0,
    tolerance: Optional[Tolerance] = None,
) -> RokhlinExtraction:
    """Approximate fragment ``i`` of ``g`` to within ``2 eps`` in the C^0 distance."""
    if not 1 <= i <= g.truncation:
        raise UsageError(f"fragment index must lie in [1, {g.truncation}], got {i}")
    if not 0 < eps < 1:
        raise UsageError(f"eps must lie in (0, 1), got {eps}")
    space = g.space
    radius = g.radii[i - 1]
    if push_time <= 4.0 + radius:
        raise UsageError(f"push time {push_time} does not clear B(4)")
    d = space.dimension
    c = fragment_center(i)
    lower = -radius * np.ones(d)
    upper = radius * np.ones(d)
    lower[0] += c
    upper[0] += c
    strip = (c - fragment_radius(i), c + fragment_radius(i))
    margin = 0.5 * (fragment_radius(i) - radius)
    push = reeb_push(push_time, (lower, upper), strip, space, tolerance, margin=margin)
    shrink = squeeze(0.9 * eps / 3.0, 3.0, 4.0, space.n, tolerance)

    pushed = conjugate(g.composite, push)
    approximant = conjugate(pushed, shrink.map)
    approximant.label = f"approx[i={i},eps={eps:g}]"
    target = conjugate(g.fragments[i - 1], push)
    target.label = f"pushed fragment[{i}]"
    center = np.zeros(d)
    center[0] = c
    center[space.z_index] = push_time
    return RokhlinExtraction(
        approximant, target, 2.0 * eps, eps, i, push, shrink, center, radius
    )


def squeeze_family(
    a: float = 0.5, r: float = 0.2, R: float = 0.4
) -> Callable[[int, Space], FlowMap]:
    def build(i: int, space: Space) -> FlowMap:
        return squeeze(a, r, R, space.n).map

    return build


def reeb_family(
    t: float = 0.15, half_width: float = 0.15
) -> Callable[[int, Space], FlowMap]:
    def build(i: int, space: Space) -> FlowMap:
        m = space.support_dimension
        box = (-half_width * np.ones(m), half_width * np.ones(m))
        strip = (-2 * half_width, 2 * half_width)
        return reeb_push(t * (1 if i % 2 else -1), box, strip, space, margin=0.1)

    return build


def identity_family() -> Callable[[int, Space], FlowMap]:
    def build(i: int, space: Space) -> FlowMap:
        f = identity_map(space)
        f.support_radius = 0.1
        return f

    return build


FAMILIES: Dict[str, Callable[[], Callable[[int, Space], FlowMap]]] = {
    "squeeze": squeeze_family,
    "reeb": reeb_family,
    "identity": identity_family,
}


def family_maps(name: str, N: int, space: Optional[Space] = None) -> List[FlowMap]:
    """The first ``N`` members of a named family of compactly supported maps."""
    if name not in FAMILIES:
        known = ", ".join(sorted(FAMILIES))
        raise UsageError(f"unknown Rokhlin family '{name}'; known: {known}")
    space = space or Space.euclidean(1)
    build = FAMILIES[name]()
    return [build(i, space) for i in range(1, N + 1)]
