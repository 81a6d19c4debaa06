"""
Types for the symbolic coding.
"""

from dataclasses import dataclass

import numpy as np

from solendim.errors import MalformedWindow
from solendim.utils import BaseEnum


class Direction(BaseEnum):
    """Shift direction on the two-sided sequence space."""

    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True, eq=False)
class SymbolWindow:
    """
    Finite window s_lo ... s_hi of a two-sided sequence over {-1, +1}.

    The window always covers index 0 (lo <= 0 <= hi).
    """

    symbols: np.ndarray
    lo: int
    hi: int

    def __post_init__(self) -> None:
        raw = np.asarray(self.symbols)
        if raw.ndim != 1:
            raise MalformedWindow("symbols must be a one-dimensional array")
        if not self.lo <= 0 <= self.hi:
            raise MalformedWindow(f"window [{self.lo}, {self.hi}] does not cover index 0")
        if raw.size != self.hi - self.lo + 1:
            raise MalformedWindow(
                f"{raw.size} symbols do not fill the index range [{self.lo}, {self.hi}]"
            )
        # checked before the int8 cast, which would truncate 1.5 to 1
        if not np.all(np.isin(raw, (-1, 1))):
            raise MalformedWindow("symbols must all be -1 or +1")
        symbols = raw.astype(np.int8)
        symbols.setflags(write=False)
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "lo", int(self.lo))
        object.__setattr__(self, "hi", int(self.hi))

    def __len__(self) -> int:
        return int(self.symbols.size)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymbolWindow):
            return NotImplemented
        return (
            self.lo == other.lo
            and self.hi == other.hi
            and bool(np.array_equal(self.symbols, other.symbols))
        )

    def __hash__(self) -> int:
        return hash((self.lo, self.hi, self.symbols.tobytes()))

    def at(self, k: int) -> int:
        """Symbol s_k."""
        if not self.lo <= k <= self.hi:
            raise IndexError(f"index {k} outside window [{self.lo}, {self.hi}]")
        return int(self.symbols[k - self.lo])

    def forward_word(self) -> np.ndarray:
        """s_0, s_1, ..., s_hi."""
        return self.symbols[-self.lo :]

    def backward_word(self) -> np.ndarray:
        """s_-1, s_-2, ..., s_lo (most recent past first)."""
        return self.symbols[: -self.lo][::-1]

    def __str__(self) -> str:
        signs = "".join("+" if s > 0 else "-" for s in self.symbols)
        return f"{self.lo}:{self.hi}:{signs}"


@dataclass(frozen=True)
class BernoulliSpec:
    """
    Bernoulli measure b^p on the two-sided shift: P(s_k = +1) = p.
    """

    p: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"probability p={self.p!r} is not in [0, 1]")
        object.__setattr__(self, "p", float(self.p))

    @property
    def degenerate(self) -> bool:
        """A point mass on a constant sequence."""
        return self.p in (0.0, 1.0)

    def to_dict(self) -> dict:
        return {"p": self.p}
