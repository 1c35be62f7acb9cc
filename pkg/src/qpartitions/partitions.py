"""
Integer partitions: conjugates, hooks, kappa and enumeration.
"""

from functools import lru_cache
from typing import Iterator, Sequence, Tuple

Partition = Tuple[int, ...]


def as_partition(parts: Sequence[int]) -> Partition:
    """
    Normalize a sequence into a partition tuple.

    Trailing zeros are dropped.

    Raises:
        ValueError: If the parts are negative or not weakly decreasing
    """
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not a partition")
    return tuple(p for p in parts if p > 0)


def size(lam: Partition) -> int:
    return sum(lam)


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


@lru_cache(maxsize=None)
def kappa(lam: Partition) -> int:
    """
    Content sum: kappa(lam) = sum_i lam_i (lam_i - 2i + 1), rows counted from 1.
    """
    return sum(p * (p - 2 * i + 1) for i, p in enumerate(lam, start=1))


def n_statistic(lam: Partition) -> int:
    """n(lam) = sum_i (i - 1) lam_i."""
    return sum(i * p for i, p in enumerate(lam))


@lru_cache(maxsize=None)
def hooks(lam: Partition) -> Tuple[int, ...]:
    """
    Hook lengths of every cell, row by row.

    Returns:
        Tuple with one entry per cell
    """
    lt = conjugate(lam)
    return tuple(
        (p - j) + (lt[j] - i) - 1
        for i, p in enumerate(lam)
        for j in range(p)
    )


def contains(lam: Partition, eta: Partition) -> bool:
    """Whether the diagram of eta fits inside the diagram of lam."""
    if len(eta) > len(lam):
        return False
    return all(e <= l for e, l in zip(eta, lam))


@lru_cache(maxsize=None)
def partitions_of(n: int, largest: int = None) -> Tuple[Partition, ...]:
    """
    All partitions of n, in reverse lexicographic order.

    Args:
        n: size
        largest: upper bound on the first part (defaults to n)
    """
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    result = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            result.append((first,) + rest)
    return tuple(result)


def partitions_up_to(n: int) -> Iterator[Partition]:
    """Every partition of size at most n, by increasing size."""
    for k in range(n + 1):
        yield from partitions_of(k)


@lru_cache(maxsize=None)
def sub_partitions(lam: Partition) -> Tuple[Partition, ...]:
    """Every partition contained in lam, including the empty one and lam itself."""
    if not lam:
        return ((),)
    result = []

    def grow(prefix: Partition, row: int, bound: int):
        result.append(prefix)
        if row == len(lam):
            return
        for p in range(1, min(bound, lam[row]) + 1):
            grow(prefix + (p,), row + 1, p)

    grow((), 0, lam[0])
    return tuple(result)
