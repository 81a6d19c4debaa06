"""
Solendim utility helpers.
"""

from pathlib import Path
from typing import List, Tuple, Union

import numpy as np


def derive_seed(seed: int, *keys: int) -> int:
    """
    Mix a base seed with integer keys into an independent child seed.

    The mixing is fixed: the first 32-bit word generated by
    ``numpy.random.SeedSequence(seed, spawn_key=keys)``. Keys go in the spawn
    key rather than the entropy, where trailing zero words would be treated
    as padding and ``derive_seed(s, 0)`` would equal ``derive_seed(s)``.
    Streams fanned out to workers use distinct keys (orbit index, query
    split, coordinate).

    Args:
        seed (int): Base seed of the run.
        *keys (int): Stream identifiers.

    Returns:
        int: Child seed.
    """
    sequence = np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in keys))
    return int(sequence.generate_state(1)[0])


def parse_float_list(raw: str, expected: int | None = None) -> List[float]:
    """
    Parse a comma-separated list of floats such as ``"0.3,0.3,0.2,0.2"``.

    Raises:
        ValueError: If an entry is not a number or the count is wrong.
    """
    parts = [part.strip() for part in raw.split(",") if part.strip()]
    values = [float(part) for part in parts]
    if expected is not None and len(values) != expected:
        raise ValueError(f"expected {expected} values, got {len(values)}: {raw!r}")
    return values


def parse_int_range(raw: str) -> Tuple[int, int]:
    """
    Parse an inclusive integer range written ``"kmin:kmax"``.
    """
    lo, sep, hi = raw.partition(":")
    if not sep:
        raise ValueError(f"expected 'kmin:kmax', got {raw!r}")
    return int(lo), int(hi)


def ensure_parent_dir(file_path: Union[str, Path]) -> Path:
    """
    Ensure the parent directory of a file exists.

    Args:
        file_path (Union[str, Path]): Path to the file.

    Returns:
        Path: Path to the file.
    """
    file_path = Path(file_path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    return file_path
