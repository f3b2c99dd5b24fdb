"""The standard one-forms of the model spaces."""

import enum
from dataclasses import dataclass

import numpy as np

from ..errors import UsageError
from .spaces import Space, SpaceKind, TangentVector


class OneFormId(str, enum.Enum):
    ALPHA0 = "alpha0"  # dz - sum y dx
    ALPHA0_PRIME = "alpha0_prime"  # dz + (1/2) sum (x dy - y dx)
    LAMBDA0 = "lambda0"  # -sum y dx
    DTHETA = "dtheta"  # dz


@dataclass(frozen=True)
class OneForm:
    """A named one-form on ``space``, evaluated from its closed-form coefficients."""

    id: OneFormId
    space: Space

    def __post_init__(self):
        contact_only = (OneFormId.ALPHA0, OneFormId.ALPHA0_PRIME)
        if self.id in contact_only and not self.space.is_contact:
            raise UsageError(f"{self.id.value} needs a contact space, got {self.space}")
        if self.id == OneFormId.DTHETA and not self.space.is_contact:
            raise UsageError("dtheta needs a space with a z coordinate")

    @classmethod
    def alpha0(cls, space: Space) -> "OneForm":
        return cls(OneFormId.ALPHA0, space)

    @classmethod
    def alpha0_prime(cls, space: Space) -> "OneForm":
        return cls(OneFormId.ALPHA0_PRIME, space)

    @classmethod
    def lambda0(cls, space: Space) -> "OneForm":
        return cls(OneFormId.LAMBDA0, space)

    @classmethod
    def dtheta(cls, space: Space) -> "OneForm":
        return cls(OneFormId.DTHETA, space)

    def coefficients(self, coords: np.ndarray) -> np.ndarray:
        """Covector components at each row of ``coords``, shape ``(..., dimension)``."""
        coords = np.asarray(coords, dtype=float)
        n = self.space.n
        x = coords[..., :n]
        y = coords[..., n : 2 * n]
        out = np.zeros_like(coords)
        if self.id in (OneFormId.ALPHA0, OneFormId.LAMBDA0):
            out[..., :n] = -y
        elif self.id == OneFormId.ALPHA0_PRIME:
            out[..., :n] = -0.5 * y
            out[..., n : 2 * n] = 0.5 * x
        if self.id != OneFormId.LAMBDA0 and self.space.is_contact:
            out[..., self.space.z_index] = 1.0
        return out

    def differential(self) -> np.ndarray:
        """Constant matrix ``W`` with ``d(form)(u, v) = u^T W v``."""
        d = self.space.dimension
        n = self.space.n
        w = np.zeros((d, d))
        if self.id != OneFormId.DTHETA:
            for i in range(n):
                w[i, n + i] = 1.0
                w[n + i, i] = -1.0
        return w

    def __str__(self) -> str:
        return f"{self.id.value} on {self.space}"


def eval_form(form: OneForm, v: TangentVector) -> float:
    """Pair ``form`` with the tangent vector ``v``."""
    if form.space != v.space:
        raise UsageError(
            f"form on {form.space} cannot be evaluated on a vector of {v.space}"
        )
    return float(form.coefficients(v.base.coords) @ v.components)


def standard_form(space: Space) -> OneForm:
    """The form each space is equipped with by default."""
    if space.kind == SpaceKind.SYMPLECTIC_BASE:
        return OneForm.lambda0(space)
    return OneForm.alpha0(space)
