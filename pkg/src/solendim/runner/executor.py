"""
Ordered fan-out over a worker pool.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from solendim.utils.printing import print_debug

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(workers: Optional[int]) -> int:
    """
    Number of workers to use: the given count, or the available parallelism.
    """
    if workers is None:
        return os.cpu_count() or 1
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    return workers


def map_ordered(
    func: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None
) -> List[R]:
    """
    Apply ``func`` to every item, returning results in submission order.

    Args:
        func: The task, called once per item.
        items: Task inputs.
        workers: Pool size; one worker runs inline without a pool.

    Returns:
        List[R]: One result per item, in the order of ``items``.
    """
    items = list(items)
    count = min(resolve_workers(workers), max(len(items), 1))

    if count == 1:
        return [func(item) for item in items]

    print_debug(f"fanning {len(items)} tasks over {count} workers")
    with ThreadPoolExecutor(max_workers=count) as pool:
        return list(pool.map(func, items))
