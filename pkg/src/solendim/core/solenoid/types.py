"""
Types for the solenoid dynamics.
"""

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Sequence, Tuple

import numpy as np

from solendim.errors import OutOfRange, ParameterError, TauSumTooLarge


class Branch(IntEnum):
    """Half-cube a point belongs to: 1 for x >= 0, 2 for x < 0."""

    FIRST = 1
    SECOND = 2


@dataclass(frozen=True)
class ParamVector:
    """
    Solenoid parameter v = (beta1, beta2, tau1, tau2).

    All ratios lie in (0, 1) and tau1 + tau2 < 1. ``moran_valid`` records
    whether beta1 + beta2 > tau1 + tau2, which the closed-form attractor
    dimensions require.
    """

    beta1: float
    beta2: float
    tau1: float
    tau2: float
    moran_valid: bool = field(init=False)

    def __post_init__(self) -> None:
        for name in ("beta1", "beta2", "tau1", "tau2"):
            value = getattr(self, name)
            if not 0.0 < value < 1.0:
                raise OutOfRange(f"{name}={value!r} is not in the open interval (0, 1)")
            object.__setattr__(self, name, float(value))
        if self.tau1 + self.tau2 >= 1.0:
            raise TauSumTooLarge(
                f"tau1 + tau2 = {self.tau1 + self.tau2!r} must be < 1"
            )
        object.__setattr__(
            self, "moran_valid", self.beta1 + self.beta2 > self.tau1 + self.tau2
        )

    @property
    def betas(self) -> Tuple[float, float]:
        return self.beta1, self.beta2

    @property
    def taus(self) -> Tuple[float, float]:
        return self.tau1, self.tau2

    @property
    def disjoint(self) -> bool:
        """True when the two cross-section images do not overlap in y."""
        return self.beta1 + self.beta2 < 1.0

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return self.beta1, self.beta2, self.tau1, self.tau2

    def to_dict(self) -> dict:
        return {
            "beta1": self.beta1,
            "beta2": self.beta2,
            "tau1": self.tau1,
            "tau2": self.tau2,
            "moran_valid": self.moran_valid,
        }


def validate_params(raw: Sequence[float]) -> ParamVector:
    """
    Build a validated ParamVector from four raw numbers.

    Raises:
        ParameterError: If ``raw`` does not hold exactly four numbers.
        OutOfRange: If a component is outside (0, 1).
        TauSumTooLarge: If tau1 + tau2 >= 1.
    """
    values = list(raw)
    if len(values) != 4:
        raise ParameterError(f"expected four parameters, got {len(values)}")
    return ParamVector(*(float(value) for value in values))


@dataclass(frozen=True)
class Point3:
    """A point (x, y, z) of the cube W = [-1, 1]^3."""

    x: float
    y: float
    z: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    def in_cube(self, tolerance: float = 0.0) -> bool:
        bound = 1.0 + tolerance
        return all(-bound <= c <= bound for c in (self.x, self.y, self.z))


@dataclass(frozen=True)
class DerivativeMatrix:
    """
    Diagonal Jacobian diag(2, beta_i, tau_i) of the branch ``branch``.
    """

    diag: Tuple[float, float, float]
    branch: Branch

    def as_array(self) -> np.ndarray:
        return np.diag(self.diag)

    def log_rates(self) -> Tuple[float, float, float]:
        """Logarithms of the three expansion/contraction rates."""
        return tuple(float(np.log(entry)) for entry in self.diag)  # type: ignore[return-value]
