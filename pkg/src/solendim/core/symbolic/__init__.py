"""
Symbolic coding: the two-sided shift, coding maps and Bernoulli sampling.
"""

from .coding import (
    Approximation,
    CodedPoint,
    coding_map,
    dyadic_expansion,
    dyadic_values,
    gamma_projection,
    project_words,
)
from .sampling import sample_bernoulli, sample_symbols
from .types import BernoulliSpec, Direction, SymbolWindow
from .window import (
    shift,
    truncation_half_length,
    window_distance,
    window_from_text,
    window_to_text,
)

__all__ = [
    "Approximation",
    "BernoulliSpec",
    "CodedPoint",
    "Direction",
    "SymbolWindow",
    "coding_map",
    "dyadic_expansion",
    "dyadic_values",
    "gamma_projection",
    "project_words",
    "sample_bernoulli",
    "sample_symbols",
    "shift",
    "truncation_half_length",
    "window_distance",
    "window_from_text",
    "window_to_text",
]
