"""
Lyapunov exponents as Birkhoff averages along symbolic orbits.
"""

import math
from typing import Optional

import numpy as np

from solendim.core.solenoid import ParamVector, branch_derivative
from solendim.core.symbolic import BernoulliSpec, sample_symbols
from solendim.runner.executor import map_ordered
from solendim.utils import derive_seed

from .types import LyapunovEstimate


def _stderr(values: np.ndarray) -> float:
    if values.size < 2 or np.ptp(values) == 0.0:
        return 0.0
    return float(values.std(ddof=1) / math.sqrt(values.size))


def lyapunov_birkhoff(
    v: ParamVector,
    spec: BernoulliSpec,
    n_iterates: int,
    n_orbits: int,
    seed: int,
    workers: Optional[int] = 1,
) -> LyapunovEstimate:
    """
    Average log |D f| entries along b^p-typical orbits.

    Orbits are followed through their symbols: the doubling coordinate of a
    floating-point orbit loses one bit per iterate, whereas the derivative
    only depends on the branch sequence. Orbit i draws its symbols from
    derive_seed(seed, i).

    Args:
        v: Solenoid parameters.
        spec: Bernoulli measure driving the symbols.
        n_iterates: Orbit length.
        n_orbits: Number of independent orbits.
        seed: Base seed.
        workers: Pool size for the orbits.

    Returns:
        LyapunovEstimate: Exponents in nats per iterate.
    """
    if n_iterates < 1:
        raise ValueError(f"n_iterates must be >= 1, got {n_iterates}")
    if n_orbits < 1:
        raise ValueError(f"n_orbits must be >= 1, got {n_orbits}")

    def positive_fraction(index: int) -> float:
        rng = np.random.default_rng(derive_seed(seed, index))
        symbols = sample_symbols(spec, n_iterates, rng)
        return float(np.count_nonzero(symbols == 1)) / n_iterates

    fractions = np.array(map_ordered(positive_fraction, range(n_orbits), workers))

    first = branch_derivative(v, 1).log_rates()
    second = branch_derivative(v, 2).log_rates()

    # log rates are (log 2, log beta_i, log tau_i)
    unstable = first[0]
    beta = fractions * first[1] + (1.0 - fractions) * second[1]
    tau = fractions * first[2] + (1.0 - fractions) * second[2]

    beta_mean = float(beta.mean())
    tau_mean = float(tau.mean())
    weak_axis = "beta" if beta_mean >= tau_mean else "tau"

    return LyapunovEstimate(
        unstable=float(unstable),
        weak_stable=max(beta_mean, tau_mean),
        strong_stable=min(beta_mean, tau_mean),
        weak_axis=weak_axis,
        beta_exponent=beta_mean,
        tau_exponent=tau_mean,
        n_iterates=n_iterates,
        n_orbits=n_orbits,
        stderr={"unstable": 0.0, "beta": _stderr(beta), "tau": _stderr(tau)},
    )
