"""
Solendim Symbol Sampling Tests
"""

import numpy as np
import pytest

from solendim.core.symbolic import BernoulliSpec, sample_bernoulli, sample_symbols

# ---------------------------
# Unit tests
# ---------------------------


def test_sample_bernoulli_deterministic():
    """
    Scenario:
        Sample the same window twice with the same seed.

    Expected:
        Both windows are equal; another seed gives another window.
    """
    spec = BernoulliSpec(0.5)
    a = sample_bernoulli(spec, -20, 20, seed=7)
    b = sample_bernoulli(spec, -20, 20, seed=7)
    c = sample_bernoulli(spec, -20, 20, seed=8)

    assert a == b
    assert a != c
    assert (a.lo, a.hi) == (-20, 20)


def test_sample_bernoulli_degenerate():
    """
    Scenario:
        Sample with p = 1 and p = 0.

    Expected:
        Constant windows of +1 and -1.
    """
    assert np.all(sample_bernoulli(BernoulliSpec(1.0), -5, 5, seed=0).symbols == 1)
    assert np.all(sample_bernoulli(BernoulliSpec(0.0), -5, 5, seed=0).symbols == -1)


def test_sample_bernoulli_bad_range():
    """
    Scenario:
        Ask for a window that does not cover index 0.

    Expected:
        ValueError is raised.
    """
    with pytest.raises(ValueError):
        sample_bernoulli(BernoulliSpec(0.5), 1, 5, seed=0)


def test_sample_symbols_frequency():
    """
    Scenario:
        Draw 10^5 symbols with p = 0.3.

    Expected:
        The fraction of +1 is within 0.01 of 0.3.
    """
    rng = np.random.default_rng(0)
    symbols = sample_symbols(BernoulliSpec(0.3), 100_000, rng)

    assert set(np.unique(symbols).tolist()) == {-1, 1}
    assert abs(np.mean(symbols == 1) - 0.3) < 0.01
