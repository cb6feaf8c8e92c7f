"""Prouhet-Thue-Morse sequence: three constructions, index partitions, exact identities.

The sequence t_n is the parity of the binary digit sum of n (OEIS A010060).
Everything downstream keys off the partition of {0, ..., 2^N - 1} into the
indices where t_n = 0 ("evens") and t_n = 1 ("odds").
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .capacity import MAX_BLOCK_ORDER, check


@dataclass(frozen=True)
class BitBlock:
    """First 2^order terms of the sequence as a uint8 array."""

    order: int
    bits: np.ndarray


@dataclass(frozen=True)
class IndexPartition:
    """Indices below 2^order split by sequence value (evens: t_n = 0, odds: t_n = 1)."""

    order: int
    evens: np.ndarray
    odds: np.ndarray


def ptm_digit_sum(n: int) -> int:
    """t_n computed as popcount(n) mod 2."""
    if n < 0:
        raise ValueError("index must be non-negative")
    return n.bit_count() & 1


def ptm_recursive(n: int) -> int:
    """t_n from the recurrence t_0 = 0, t_{2n} = t_n, t_{2n+1} = 1 - t_n.

    The recurrence is unrolled iteratively: each halving step strips the low
    bit and complements the running value when that bit is set.
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    bit = 0
    while n:
        if n & 1:
            bit ^= 1
        n >>= 1
    return bit


def ptm_block(order: int) -> BitBlock:
    """Block T_order built by repeatedly appending the bitwise complement."""
    if order < 0:
        raise ValueError("order must be non-negative")
    check(order, MAX_BLOCK_ORDER, "ptm_block")
    bits = np.zeros(1, dtype=np.uint8)
    for _ in range(order):
        bits = np.concatenate([bits, bits ^ 1])
    return BitBlock(order, bits)


def partition_sets(order: int) -> IndexPartition:
    """E/O index partition of {0, ..., 2^order - 1}, both sorted ascending."""
    if order < 1:
        raise ValueError("order must be >= 1")
    bits = ptm_block(order).bits
    idx = np.arange(2**order, dtype=np.int64)
    return IndexPartition(order, idx[bits == 0], idx[bits == 1])


def multigrade_sums(order: int, k: int) -> tuple[int, int]:
    """Exact k-th power sums over the two index classes.

    Uses Python integers throughout: the sums are equal for every k < order
    and differ at k = order, and that boundary must not be blurred by
    floating-point rounding (at order 12, k = 11 the sums exceed 2^63).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if k < 0:
        raise ValueError("power must be non-negative")
    part = partition_sets(order)
    sum_e = sum(int(e) ** k for e in part.evens)
    sum_o = sum(int(o) ** k for o in part.odds)
    return sum_e, sum_o


def poly_identity(x: float, order: int) -> tuple[float, float]:
    """Evaluate both sides of the product generating identity at x.

    lhs = prod_{i=0}^{order} (1 - x^(2^i)), rhs = sum of (-1)^{t_j} x^j over
    j < 2^(order+1), each side computed independently in double precision.
    Raises OverflowError when either side leaves the finite range.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    check(order + 1, MAX_BLOCK_ORDER, "poly_identity")
    x = float(x)

    lhs = 1.0
    for i in range(order + 1):
        lhs *= 1.0 - x ** (2**i)
    if not math.isfinite(lhs):
        raise OverflowError("product side is non-finite")

    bits = ptm_block(order + 1).bits
    signs = 1.0 - 2.0 * bits.astype(np.float64)
    powers = np.power(x, np.arange(2 ** (order + 1), dtype=np.float64))
    if not np.all(np.isfinite(powers)):
        raise OverflowError("series side has non-finite terms")
    rhs = float(np.sum(signs * powers))
    return lhs, rhs


def poly_identity_scale(x: float, order: int) -> float:
    """Largest term magnitude on the series side; tolerance reference for poly_identity."""
    return max(1.0, abs(x) ** (2 ** (order + 1) - 1))
