"""Tiny bitmask helpers.

Throughout the package a *point set* over a carrier ``{0, ..., n-1}`` is a
plain Python int used as a bitmask: bit ``i`` is set iff point ``i`` is in
the set.  Masks are hashable, exact, and fast to combine, which is all the
relation algebra and the exact solvers need.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(points: Iterable[int]) -> int:
    """Bitmask of an iterable of point indices."""
    m = 0
    for p in points:
        m |= 1 << p
    return m


def points_of(mask: int) -> tuple[int, ...]:
    """Sorted tuple of point indices in a mask."""
    return tuple(iter_bits(mask))


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full_mask(n: int) -> int:
    return (1 << n) - 1


def subsets_of(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
