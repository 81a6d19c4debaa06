"""
Shift maps, text form and metric on finite symbol windows.
"""

import math
import re

import numpy as np

from solendim.errors import MalformedWindow, WindowExhausted

from .types import Direction, SymbolWindow

_TEXT_PATTERN = re.compile(r"^(-?\d+):(-?\d+):([+-]+)$")


def shift(w: SymbolWindow, direction: Direction | str) -> SymbolWindow:
    """
    Apply the forward shift (s_k) -> (s_{k+1}) or its inverse to a window.

    The stored symbols are unchanged; only the index range moves. Forward
    decrements both bounds, backward increments them.

    Raises:
        WindowExhausted: If the shifted window no longer covers index 0.
    """
    step = -1 if Direction(direction) is Direction.FORWARD else 1
    lo, hi = w.lo + step, w.hi + step

    if not lo <= 0 <= hi:
        raise WindowExhausted(
            f"{Direction(direction).value} shift of window [{w.lo}, {w.hi}] "
            "no longer covers index 0"
        )
    return SymbolWindow(w.symbols, lo, hi)


def window_to_text(w: SymbolWindow) -> str:
    """Compact form ``lo:hi:+--+...`` used in golden files."""
    return str(w)


def window_from_text(text: str) -> SymbolWindow:
    """
    Parse the compact ``lo:hi:+--+...`` form.

    Raises:
        MalformedWindow: If the text does not match the form.
    """
    match = _TEXT_PATTERN.match(text.strip())
    if match is None:
        raise MalformedWindow(f"cannot parse symbol window {text!r}")
    lo, hi, signs = int(match.group(1)), int(match.group(2)), match.group(3)
    symbols = np.array([1 if c == "+" else -1 for c in signs], dtype=np.int8)
    return SymbolWindow(symbols, lo, hi)


def window_distance(a: SymbolWindow, b: SymbolWindow) -> float:
    """
    Product metric sum_k |s_k - t_k| 2^{-|k|} over the shared index range.
    """
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    indices = np.arange(lo, hi + 1)
    left = a.symbols[lo - a.lo : hi - a.lo + 1]
    right = b.symbols[lo - b.lo : hi - b.lo + 1]
    diff = np.abs(left.astype(float) - right.astype(float))
    return float(np.sum(diff * np.exp2(-np.abs(indices))))


def truncation_half_length(gamma_max: float, tolerance: float) -> int:
    """
    Smallest hi >= 0 with gamma_max^{hi+1} < tolerance.

    Use gamma_max = 1/2 for the past half of a window (dyadic side).
    """
    if not 0.0 < gamma_max < 1.0:
        raise ValueError(f"contraction {gamma_max!r} must be in (0, 1)")
    if not 0.0 < tolerance < 1.0:
        raise ValueError(f"tolerance {tolerance!r} must be in (0, 1)")
    hi = max(int(math.ceil(math.log(tolerance) / math.log(gamma_max))) - 1, 0)
    while gamma_max ** (hi + 1) >= tolerance:
        hi += 1
    return hi
