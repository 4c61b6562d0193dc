"""Bitmask helpers. Subsets of an n-element universe are ints with bit i set for element i."""

from __future__ import annotations

from collections.abc import Iterator


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def full_mask(n: int) -> int:
    return (1 << n) - 1


def reverse_bits(mask: int, n: int) -> int:
    out = 0
    for i in range(n):
        if mask >> i & 1:
            out |= 1 << (n - 1 - i)
    return out


def canonical_key(mask: int, n: int) -> tuple[int, tuple[int, ...]]:
    # cardinality, then the sorted member indices; {a} < {b} and {a,b} < {a,c} < {b,c}
    return popcount(mask), tuple(bits(mask))
