"""
Report types for the closed-form dimension theory.
"""

from dataclasses import dataclass, field
from typing import List, Optional

from solendim.core.symbolic import BernoulliSpec
from solendim.utils import BaseEnum


class Regime(BaseEnum):
    """Whether the cross-section images overlap in y."""

    DISJOINT = "disjoint"
    OVERLAPPING = "overlapping"


class MoranEquation(BaseEnum):
    BETA = "beta"
    BETA_TAU = "beta_tau"


class HausdorffStatus(BaseEnum):
    """How much is known about the Hausdorff dimension."""

    EXACT = "exact"
    GENERIC = "generic"


class StableBranch(BaseEnum):
    WEAK = "weak-stable-dominant"
    STRONG = "strong-stable-dominant"


class ProjectionSource(BaseEnum):
    CLOSED_FORM = "closed-form"
    GENERIC_HEURISTIC = "generic-heuristic"
    USER_SUPPLIED = "user-supplied"


class Verdict(BaseEnum):
    FULL = "full-dimension"
    STRICT_GAP = "strict-gap"
    NOT_COVERED = "not-covered"


class Formula(BaseEnum):
    """Tags naming each formula a report was built from."""

    MORAN_BETA = "moran-beta"
    MORAN_BETA_TAU = "moran-beta-tau"
    PRODUCT_RULE = "product-rule"
    UNSTABLE_ENTROPY = "unstable-entropy"
    LEDRAPPIER_YOUNG_WEAK = "ledrappier-young-weak"
    LEDRAPPIER_YOUNG_STRONG = "ledrappier-young-strong"
    PROJECTED_CLOSED_FORM = "projected-closed-form"
    PROJECTED_HEURISTIC = "projected-heuristic"
    PROJECTED_OVERRIDE = "projected-override"
    DEGENERATE_POINT_MASS = "degenerate-point-mass"
    VARIATIONAL_GAP = "variational-gap"


@dataclass(frozen=True)
class MoranRoot:
    d: float
    equation: MoranEquation
    residual: float

    def to_dict(self) -> dict:
        return {"d": self.d, "equation": self.equation.value, "residual": self.residual}


@dataclass(frozen=True)
class DimensionReport:
    """
    Box and Hausdorff dimension of the attractor.

    ``hausdorff_dim`` is None when only the generic marker can be given.
    """

    box_dim: float
    hausdorff_dim: Optional[float]
    hausdorff_status: HausdorffStatus
    regime: Regime
    moran: MoranRoot
    caveats: List[str] = field(default_factory=list)
    formulas: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        hausdorff = (
            self.hausdorff_dim
            if self.hausdorff_dim is not None
            else HausdorffStatus.GENERIC.value
        )
        return {
            "box_dim": self.box_dim,
            "hausdorff_dim": hausdorff,
            "hausdorff_status": self.hausdorff_status.value,
            "regime": self.regime.value,
            "moran": self.moran.to_dict(),
            "caveats": list(self.caveats),
            "formulas": list(self.formulas),
        }


@dataclass(frozen=True)
class ProjectedDimension:
    """Dimension of the projection of b^p onto one stable axis."""

    value: float
    source: ProjectionSource
    caveats: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "source": self.source.value,
            "caveats": list(self.caveats),
        }


@dataclass(frozen=True)
class MeasureDimensionReport:
    total: float
    unstable: float
    stable: float
    branch: StableBranch
    projected: ProjectedDimension
    entropy: float
    xi_beta: float
    xi_tau: float
    caveats: List[str] = field(default_factory=list)
    formulas: List[str] = field(default_factory=list)

    @property
    def projected_dim(self) -> float:
        return self.projected.value

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "unstable": self.unstable,
            "stable": self.stable,
            "branch": self.branch.value,
            "projected_dim": self.projected.value,
            "projected_source": self.projected.source.value,
            "entropy": self.entropy,
            "xi_beta": self.xi_beta,
            "xi_tau": self.xi_tau,
            "caveats": list(self.caveats),
            "formulas": list(self.formulas),
        }


@dataclass(frozen=True)
class FullDimVerdict:
    """
    Whether an invariant measure attains the attractor dimension.

    ``measure_dim`` is the dimension of b^{0.5}; ``gap_bound`` is set for
    strict gaps and bounds the dimension of measures near b^{0.5}.
    """

    verdict: Verdict
    witness: Optional[BernoulliSpec]
    measure_dim: Optional[float]
    attractor_dim: float
    gap_bound: Optional[float] = None
    caveats: List[str] = field(default_factory=list)
    formulas: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "witness": self.witness.to_dict() if self.witness else None,
            "measure_dim": self.measure_dim,
            "attractor_dim": self.attractor_dim,
            "gap_bound": self.gap_bound,
            "caveats": list(self.caveats),
            "formulas": list(self.formulas),
        }
