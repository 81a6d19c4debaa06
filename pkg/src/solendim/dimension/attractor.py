"""
Box and Hausdorff dimension of the solenoid attractor.
"""

from solendim.core.solenoid import ParamVector
from solendim.errors import HypothesisViolated
from solendim.settings import GENERIC_BETA_BOUND

from .moran import solve_moran_beta, solve_moran_beta_tau
from .types import DimensionReport, Formula, HausdorffStatus, Regime

GENERIC_CAVEAT = f"a.e. beta1, beta2 < {GENERIC_BETA_BOUND}"
OUTSIDE_RANGE_CAVEAT = "outside proven range"


def require_moran_valid(v: ParamVector) -> None:
    if not v.moran_valid:
        raise HypothesisViolated(
            f"beta1 + beta2 = {v.beta1 + v.beta2!r} <= tau1 + tau2 = "
            f"{v.tau1 + v.tau2!r}, no closed-form dimension"
        )


def regime_of(v: ParamVector) -> Regime:
    return Regime.DISJOINT if v.disjoint else Regime.OVERLAPPING


def attractor_dimension(v: ParamVector) -> DimensionReport:
    """
    Dimensions of the attractor [-1, 1] x cross-section.

    In the disjoint regime both dimensions equal 1 + d with d the root of
    beta1^d + beta2^d = 1. In the overlapping regime the box dimension is
    2 + d with d the root of beta1 tau1^d + beta2 tau2^d = 1; the Hausdorff
    dimension agrees only for almost every beta1, beta2 below the generic
    bound and is otherwise left as the generic marker.

    Raises:
        HypothesisViolated: If beta1 + beta2 <= tau1 + tau2.
    """
    require_moran_valid(v)

    if v.disjoint:
        root = solve_moran_beta(v)
        box = root.d + 1.0
        return DimensionReport(
            box_dim=box,
            hausdorff_dim=box,
            hausdorff_status=HausdorffStatus.EXACT,
            regime=Regime.DISJOINT,
            moran=root,
            formulas=[Formula.MORAN_BETA.value, Formula.PRODUCT_RULE.value],
        )

    root = solve_moran_beta_tau(v)
    box = root.d + 2.0
    formulas = [Formula.MORAN_BETA_TAU.value, Formula.PRODUCT_RULE.value]

    if max(v.betas) < GENERIC_BETA_BOUND:
        return DimensionReport(
            box_dim=box,
            hausdorff_dim=box,
            hausdorff_status=HausdorffStatus.GENERIC,
            regime=Regime.OVERLAPPING,
            moran=root,
            caveats=[GENERIC_CAVEAT],
            formulas=formulas,
        )

    return DimensionReport(
        box_dim=box,
        hausdorff_dim=None,
        hausdorff_status=HausdorffStatus.GENERIC,
        regime=Regime.OVERLAPPING,
        moran=root,
        caveats=[OUTSIDE_RANGE_CAVEAT],
        formulas=formulas,
    )
