"""Brute-force reference computations, kept independent of the package."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List


def set_partitions(n: int) -> Iterator[List[int]]:
    """All set partitions of {0..n-1} as restricted growth strings."""
    if n == 0:
        yield []
        return

    def rec(prefix: List[int], top: int):
        if len(prefix) == n:
            yield list(prefix)
            return
        for b in range(top + 2):
            prefix.append(b)
            yield from rec(prefix, max(top, b))
            prefix.pop()

    yield from rec([0], 0)


def partition_counts(n: int) -> Counter:
    """Counter mapping number of blocks -> number of set partitions."""
    return Counter((max(rgs) + 1) if rgs else 0 for rgs in set_partitions(n))


def ordered_partition_count(n: int) -> int:
    """Ordered set partitions of an n-set, by peeling off a nonempty first block."""

    @lru_cache(maxsize=None)
    def f(mask: int) -> int:
        if mask == 0:
            return 1
        total = 0
        sub = mask
        while sub:
            total += f(mask & ~sub)
            sub = (sub - 1) & mask
        return total

    return f((1 << n) - 1)


def pascal(n_max: int) -> List[List[int]]:
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, n)] + [1])
    return rows


def repeated_power(b: Fraction, e: int) -> Fraction:
    out = Fraction(1)
    for _ in range(abs(e)):
        out *= b
    return out if e >= 0 else 1 / out
