"""
Coding maps from symbol sequences to the attractor.

The x-coordinate is the signed dyadic expansion of the past symbols; y and z
are address limits of the two one-dimensional IFS A_{+1}(t) = g1 t + (1 - g1),
A_{-1}(t) = g2 t - (1 - g2) read along the future symbols.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from solendim.core.solenoid import ParamVector, Point3
from solendim.errors import InsufficientWindow
from solendim.settings import ROUNDOFF_PER_TERM

from .types import SymbolWindow


@dataclass(frozen=True)
class Approximation:
    """A truncated value and a bound on its distance to the limit."""

    value: float
    bound: float


@dataclass(frozen=True)
class CodedPoint:
    """Image of a window under the coding map, with per-coordinate bounds."""

    point: Point3
    bounds: Tuple[float, float, float]


def _check_gammas(gamma1: float, gamma2: float) -> None:
    for gamma in (gamma1, gamma2):
        if not 0.0 < gamma < 1.0:
            raise ValueError(f"contraction {gamma!r} must be in (0, 1)")


def project_words(words: np.ndarray, gamma1: float, gamma2: float) -> np.ndarray:
    """
    Address limits of many forward words at once.

    Args:
        words: (n, m) array over {-1, +1}; row i is s_0 ... s_{m-1}.
        gamma1: Contraction of the +1 map.
        gamma2: Contraction of the -1 map.

    Returns:
        np.ndarray: (n,) values A_{s_0} o ... o A_{s_{m-1}}(0).
    """
    _check_gammas(gamma1, gamma2)
    words = np.atleast_2d(np.asarray(words))
    values = np.zeros(words.shape[0], dtype=float)

    for column in range(words.shape[1] - 1, -1, -1):
        plus = words[:, column] > 0
        values = np.where(
            plus,
            gamma1 * values + (1.0 - gamma1),
            gamma2 * values - (1.0 - gamma2),
        )
    return values


def dyadic_values(words: np.ndarray) -> np.ndarray:
    """
    Signed dyadic expansions sum_k s_{-k} 2^{-k} of many past words.

    Args:
        words: (n, m) array; row i is s_{-1}, s_{-2}, ..., s_{-m}.
    """
    words = np.atleast_2d(np.asarray(words, dtype=float))
    weights = np.exp2(-np.arange(1, words.shape[1] + 1, dtype=float))
    return words @ weights


def dyadic_expansion(w: SymbolWindow) -> Approximation:
    """
    Signed dyadic expansion of the past of ``w``.

    The bound is the tail 2^{lo} plus a round-off allowance per summed term.

    Raises:
        InsufficientWindow: If the window holds no past symbol (lo > -1).
    """
    if w.lo > -1:
        raise InsufficientWindow("dyadic expansion needs at least s_-1 (lo <= -1)")
    value = float(dyadic_values(w.backward_word()[None, :])[0])
    bound = 2.0**w.lo + (-w.lo) * ROUNDOFF_PER_TERM
    return Approximation(value=value, bound=float(bound))


def gamma_projection(w: SymbolWindow, gamma1: float, gamma2: float) -> Approximation:
    """
    Normalized projection of the future of ``w`` onto [-1, 1].

    The bound max(gamma1, gamma2)^{hi+1} covers the unknown tail; each of
    the hi + 1 composed maps adds a round-off allowance on top.
    """
    _check_gammas(gamma1, gamma2)
    value = float(project_words(w.forward_word()[None, :], gamma1, gamma2)[0])
    bound = max(gamma1, gamma2) ** (w.hi + 1) + (w.hi + 1) * ROUNDOFF_PER_TERM
    return Approximation(value=value, bound=float(bound))


def coding_map(v: ParamVector, w: SymbolWindow) -> CodedPoint:
    """
    Coding map (dyadic past, beta-projection, tau-projection) of a window.

    Raises:
        InsufficientWindow: If the window holds no past symbol.
    """
    x = dyadic_expansion(w)
    y = gamma_projection(w, v.beta1, v.beta2)
    z = gamma_projection(w, v.tau1, v.tau2)
    return CodedPoint(
        point=Point3(x.value, y.value, z.value),
        bounds=(x.bound, y.bound, z.bound),
    )
