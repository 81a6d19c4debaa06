"""
Does some Bernoulli measure have full dimension on the attractor?
"""

import math
from typing import Optional

from solendim.core.solenoid import ParamVector
from solendim.core.symbolic import BernoulliSpec
from solendim.settings import EQUALITY_TOLERANCE, GENERIC_BETA_BOUND

from .attractor import attractor_dimension, require_moran_valid
from .measure import measure_dimension, xi_exponent
from .moran import moran_root
from .types import Formula, FullDimVerdict, Verdict

AE_CAVEAT = "a.e. parameters"
NOT_COVERED_CAVEAT = f"beta >= {GENERIC_BETA_BOUND} in the overlapping regime"

_HALF = BernoulliSpec(0.5)


def _projection_bound(gamma1: float, gamma2: float) -> float:
    # dimension of any projected measure is at most that of the projected set
    if gamma1 + gamma2 < 1.0:
        return moran_root((gamma1, gamma2))
    return 1.0


def gap_bound(v: ParamVector) -> Optional[float]:
    """
    Upper bound for the dimension of ergodic measures near b^{0.5}.

    This is the measure dimension of b^{0.5} with the projected part
    replaced by the dimension of the projected set, taken along the weaker
    contracting direction: with Xi_beta >= Xi_tau

        1 + log 2 / -Xi_tau + (1 - Xi_beta / Xi_tau) * dim proj_beta,

    and the same with beta and tau exchanged otherwise. In the disjoint
    weak case this is 1 + d + (-2 log 2 - d log beta1 beta2) / log tau1 tau2;
    in the overlapping weak case 2 - (log 2 + Xi_beta) / Xi_tau.

    Returns None where no bound is known (overlapping regime with a
    contraction ratio above the generic bound).
    """
    require_moran_valid(v)

    if not v.disjoint and max(v.betas) >= GENERIC_BETA_BOUND:
        return None

    h = math.log(2.0)
    xi_beta = xi_exponent(_HALF, v.beta1, v.beta2)
    xi_tau = xi_exponent(_HALF, v.tau1, v.tau2)

    if xi_beta >= xi_tau:
        projected = _projection_bound(v.beta1, v.beta2)
        return 1.0 + h / -xi_tau + (1.0 - xi_beta / xi_tau) * projected

    projected = _projection_bound(v.tau1, v.tau2)
    return 1.0 + h / -xi_beta + (1.0 - xi_tau / xi_beta) * projected


def _balanced_overlap(v: ParamVector) -> bool:
    # log_{tau2}(2 beta2) == log_{tau1}(2 beta1)
    left = math.log(2.0 * v.beta2) / math.log(v.tau2)
    right = math.log(2.0 * v.beta1) / math.log(v.tau1)
    return abs(left - right) <= EQUALITY_TOLERANCE


def full_dimension_verdict(v: ParamVector) -> FullDimVerdict:
    """
    Decide whether b^{0.5} attains the attractor dimension.

    Disjoint regime: full dimension iff beta1 == beta2. Overlapping regime
    with both betas below the generic bound: full dimension iff
    log(2 beta1) / log tau1 == log(2 beta2) / log tau2, for almost every
    parameter. Above the bound the question is not covered.

    Raises:
        HypothesisViolated: If beta1 + beta2 <= tau1 + tau2.
    """
    attractor = attractor_dimension(v)

    if v.disjoint:
        measure = measure_dimension(v, _HALF)
        full = abs(v.beta1 - v.beta2) <= EQUALITY_TOLERANCE
        caveats: list = []
    elif max(v.betas) >= GENERIC_BETA_BOUND:
        return FullDimVerdict(
            verdict=Verdict.NOT_COVERED,
            witness=None,
            measure_dim=None,
            attractor_dim=attractor.box_dim,
            caveats=[NOT_COVERED_CAVEAT],
            formulas=list(attractor.formulas),
        )
    else:
        # a.e. projection of b^{0.5} onto the beta axis has dimension 1
        measure = measure_dimension(v, _HALF, override=1.0)
        full = _balanced_overlap(v)
        caveats = [AE_CAVEAT]

    formulas = list(attractor.formulas) + list(measure.formulas)

    if full:
        return FullDimVerdict(
            verdict=Verdict.FULL,
            witness=_HALF,
            measure_dim=measure.total,
            attractor_dim=attractor.box_dim,
            caveats=caveats,
            formulas=formulas,
        )

    return FullDimVerdict(
        verdict=Verdict.STRICT_GAP,
        witness=None,
        measure_dim=measure.total,
        attractor_dim=attractor.box_dim,
        gap_bound=gap_bound(v),
        caveats=caveats,
        formulas=formulas + [Formula.VARIATIONAL_GAP.value],
    )
