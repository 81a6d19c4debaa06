"""
Dimensions of Bernoulli measures pushed onto the attractor.
"""

import math
from typing import Optional

from scipy import special

from solendim.core.solenoid import ParamVector
from solendim.core.symbolic import BernoulliSpec

from .moran import moran_root
from .types import (
    Formula,
    MeasureDimensionReport,
    ProjectedDimension,
    ProjectionSource,
    StableBranch,
)

HEURISTIC_CAVEAT = "projected dimension is a generic heuristic, exact only for a.e. parameters"


def entropy(spec: BernoulliSpec) -> float:
    """Entropy of b^p in nats, with 0 log 0 = 0."""
    return float(special.entr(spec.p) + special.entr(1.0 - spec.p))


def xi_exponent(spec: BernoulliSpec, gamma1: float, gamma2: float) -> float:
    """p log gamma1 + (1 - p) log gamma2."""
    for gamma in (gamma1, gamma2):
        if not 0.0 < gamma < 1.0:
            raise ValueError(f"contraction ratio {gamma!r} is not in (0, 1)")
    return spec.p * math.log(gamma1) + (1.0 - spec.p) * math.log(gamma2)


def projected_measure_dimension(
    spec: BernoulliSpec,
    gamma1: float,
    gamma2: float,
    override: Optional[float] = None,
) -> ProjectedDimension:
    """
    Dimension of the projection of b^p through the address map of gamma.

    Without overlaps (gamma1 + gamma2 < 1) the value is exact:
    h / -Xi, capped by the Moran root of the ratios. With overlaps only
    generic statements exist, so ``override`` wins when given and the fallback
    min(1, h / -Xi) is tagged as a heuristic. ``override`` is ignored when
    the closed form applies.
    """
    h = entropy(spec)
    ratio = h / -xi_exponent(spec, gamma1, gamma2)

    if gamma1 + gamma2 < 1.0:
        d = moran_root((gamma1, gamma2))
        return ProjectedDimension(value=min(ratio, d), source=ProjectionSource.CLOSED_FORM)

    if override is not None:
        if not 0.0 <= override <= 1.0:
            raise ValueError(f"projected dimension override {override!r} is not in [0, 1]")
        return ProjectedDimension(
            value=float(override), source=ProjectionSource.USER_SUPPLIED
        )

    return ProjectedDimension(
        value=min(1.0, ratio),
        source=ProjectionSource.GENERIC_HEURISTIC,
        caveats=[HEURISTIC_CAVEAT],
    )


def _projection_formula(source: ProjectionSource) -> str:
    return {
        ProjectionSource.CLOSED_FORM: Formula.PROJECTED_CLOSED_FORM,
        ProjectionSource.GENERIC_HEURISTIC: Formula.PROJECTED_HEURISTIC,
        ProjectionSource.USER_SUPPLIED: Formula.PROJECTED_OVERRIDE,
    }[source].value


def measure_dimension(
    v: ParamVector, spec: BernoulliSpec, override: Optional[float] = None
) -> MeasureDimensionReport:
    """
    Dimension of b^p pushed onto the attractor, split into unstable and
    stable parts.

    The unstable part is h / log 2. The stable part follows the weaker
    contracting direction: when Xi_beta >= Xi_tau

        stable = h / -Xi_tau + (1 - Xi_beta / Xi_tau) * dim proj_beta(b^p)

    and the same with beta and tau exchanged otherwise. A degenerate p is a
    point mass at a fixed point and has dimension 0.
    """
    h = entropy(spec)
    xi_beta = xi_exponent(spec, v.beta1, v.beta2)
    xi_tau = xi_exponent(spec, v.tau1, v.tau2)
    branch = StableBranch.WEAK if xi_beta >= xi_tau else StableBranch.STRONG

    if spec.degenerate:
        return MeasureDimensionReport(
            total=0.0,
            unstable=0.0,
            stable=0.0,
            branch=branch,
            projected=ProjectedDimension(value=0.0, source=ProjectionSource.CLOSED_FORM),
            entropy=h,
            xi_beta=xi_beta,
            xi_tau=xi_tau,
            formulas=[Formula.DEGENERATE_POINT_MASS.value],
        )

    unstable = h / math.log(2.0)

    if branch is StableBranch.WEAK:
        projected = projected_measure_dimension(spec, v.beta1, v.beta2, override)
        stable = h / -xi_tau + (1.0 - xi_beta / xi_tau) * projected.value
        branch_formula = Formula.LEDRAPPIER_YOUNG_WEAK.value
    else:
        projected = projected_measure_dimension(spec, v.tau1, v.tau2, override)
        stable = h / -xi_beta + (1.0 - xi_tau / xi_beta) * projected.value
        branch_formula = Formula.LEDRAPPIER_YOUNG_STRONG.value

    return MeasureDimensionReport(
        total=unstable + stable,
        unstable=unstable,
        stable=stable,
        branch=branch,
        projected=projected,
        entropy=h,
        xi_beta=xi_beta,
        xi_tau=xi_tau,
        caveats=list(projected.caveats),
        formulas=[
            Formula.UNSTABLE_ENTROPY.value,
            branch_formula,
            _projection_formula(projected.source),
        ],
    )
