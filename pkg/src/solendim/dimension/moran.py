"""
Moran equations: sum_i w_i r_i^d = 1.
"""

from typing import Optional, Sequence

import numpy as np
from scipy import optimize

from solendim.core.solenoid import ParamVector
from solendim.errors import MoranBracketError, WrongRegime
from solendim.settings import MORAN_MAX_DOUBLINGS, MORAN_RESIDUAL_TOLERANCE

from .types import MoranEquation, MoranRoot


def _moran_sum(d: float, ratios: np.ndarray, weights: np.ndarray) -> float:
    return float(np.sum(weights * ratios**d) - 1.0)


def moran_root(
    ratios: Sequence[float], weights: Optional[Sequence[float]] = None
) -> float:
    """
    Solve sum_i w_i r_i^d = 1 for d >= 0 by bisection.

    The left side decreases in d, so the bracket [0, D] is widened by
    doubling D from 1 until the sum drops below 1.

    Args:
        ratios: Contraction ratios in (0, 1).
        weights: Positive weights, all ones by default.

    Returns:
        float: The root d.

    Raises:
        ValueError: If the weights already sum to less than 1.
        MoranBracketError: If no bracket is found.
    """
    r = np.asarray(ratios, dtype=float)
    w = np.ones_like(r) if weights is None else np.asarray(weights, dtype=float)

    at_zero = _moran_sum(0.0, r, w)
    if abs(at_zero) <= MORAN_RESIDUAL_TOLERANCE:
        return 0.0
    if at_zero < 0.0:
        raise ValueError(f"weights sum to {float(w.sum())!r} < 1, no root with d >= 0")

    upper = 1.0
    for _ in range(MORAN_MAX_DOUBLINGS):
        if _moran_sum(upper, r, w) < 0.0:
            break
        upper *= 2.0
    else:
        raise MoranBracketError(
            f"no bracket for ratios {r.tolist()} after {MORAN_MAX_DOUBLINGS} doublings"
        )

    return float(
        optimize.bisect(_moran_sum, 0.0, upper, args=(r, w), xtol=1e-15, maxiter=200)
    )


def solve_moran_beta(v: ParamVector) -> MoranRoot:
    """The root of beta1^d + beta2^d = 1."""
    d = moran_root(v.betas)
    residual = v.beta1**d + v.beta2**d - 1.0
    return MoranRoot(d=d, equation=MoranEquation.BETA, residual=residual)


def solve_moran_beta_tau(v: ParamVector) -> MoranRoot:
    """
    The root of beta1 tau1^d + beta2 tau2^d = 1.

    Raises:
        WrongRegime: If beta1 + beta2 < 1, where the root would be negative.
    """
    if v.beta1 + v.beta2 < 1.0:
        raise WrongRegime(
            f"beta1 + beta2 = {v.beta1 + v.beta2!r} < 1, use the beta equation"
        )
    d = moran_root(v.taus, weights=v.betas)
    residual = v.beta1 * v.tau1**d + v.beta2 * v.tau2**d - 1.0
    return MoranRoot(d=d, equation=MoranEquation.BETA_TAU, residual=residual)
