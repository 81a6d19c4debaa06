"""
Seeded sampling of Bernoulli symbol windows.
"""

import numpy as np

from .types import BernoulliSpec, SymbolWindow


def sample_symbols(spec: BernoulliSpec, size, rng: np.random.Generator) -> np.ndarray:
    """
    I.i.d. symbols over {-1, +1} with P(+1) = p, any array shape.
    """
    return np.where(rng.random(size) < spec.p, 1, -1).astype(np.int8)


def sample_bernoulli(spec: BernoulliSpec, lo: int, hi: int, seed: int) -> SymbolWindow:
    """
    Sample the window s_lo ... s_hi of a b^p-random sequence.

    The same seed always yields the same window.
    """
    if not lo <= 0 <= hi:
        raise ValueError(f"window [{lo}, {hi}] must cover index 0")
    rng = np.random.default_rng(seed)
    return SymbolWindow(sample_symbols(spec, hi - lo + 1, rng), lo, hi)
