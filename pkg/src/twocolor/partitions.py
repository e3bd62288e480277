"""Exact partition counts by dynamic programming.

This is the ground-truth oracle for the rest of the package: it shares no
code with the series engine, so agreement between the two is evidence that
both are right.  Counts are exact Python integers; they overflow 64 bits
well inside the ranges exercised here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from . import kernels


@dataclass(frozen=True)
class PartitionTable:
    """Exact values p_k(0..max_n).  k == 0 means ordinary partitions."""

    k: int
    max_n: int
    values: Tuple[int, ...]


def partition_table(max_n: int) -> PartitionTable:
    """Ordinary partition numbers p(0..max_n)."""
    if max_n < 0:
        raise ValueError("max_n must be non-negative, got %d" % max_n)
    counts = kernels.dp_counts(list(range(1, max_n + 1)), max_n)
    return PartitionTable(0, max_n, tuple(counts))


def two_color_table(k: int, max_n: int) -> PartitionTable:
    """Partitions with a second color available for parts divisible by k.

    Generating function 1 / ((q;q)_inf (q^k;q^k)_inf): every part size
    occurs normally, and multiples of k occur again in a second color.
    """
    if k < 1:
        raise ValueError("k must be positive, got %d" % k)
    if max_n < 0:
        raise ValueError("max_n must be non-negative, got %d" % max_n)
    parts = list(range(1, max_n + 1)) + list(range(k, max_n + 1, k))
    counts = kernels.dp_counts(parts, max_n)
    return PartitionTable(k, max_n, tuple(counts))
