import concurrent.futures
from typing import Callable, Iterable, List, Optional, TypeVar

from phaseswitch.config import SimulationConfig

T = TypeVar('T')
R = TypeVar('R')


def map_ordered(func: Callable[[T], R], items: Iterable[T], num_workers: Optional[int] = None) -> List[R]:
    """
    Apply `func` to every item, possibly on a thread pool, and return results in input order.

    Args:
        func (Callable): The function to evaluate per item.
        items (Iterable): The inputs.
        num_workers (int, optional): Pool size. Defaults to PHASESWITCH_WORKERS.

    Returns:
        List: One result per item, in the order of `items`.
    """
    items = list(items)
    num_workers = SimulationConfig.get_workers() if num_workers is None else max(1, num_workers)
    if num_workers == 1 or len(items) < 2:
        return [func(item) for item in items]
    with concurrent.futures.ThreadPoolExecutor(max_workers=num_workers) as executor:
        return list(executor.map(func, items))


__all__ = [
    "map_ordered",
]
