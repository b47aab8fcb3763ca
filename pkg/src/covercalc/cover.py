"""Open covers and iterated star operators.

The load-bearing object is the *minimal cover* of a space: the family of
distinct minimal open sets.  It refines every open cover (any open set
containing x contains U_x), and stars under a finer cover are smaller, so
every "for every open cover ..." invariant is worst on the minimal cover.
The enumerators below exist to validate that reduction exhaustively at
small sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .bitset import full_mask, points_of
from .space import BudgetExceeded, FiniteSpace


@dataclass(frozen=True)
class OpenCover:
    """A family of open sets (masks) whose union is the carrier."""

    space: FiniteSpace
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        union = 0
        for m in self.members:
            if not self.space.is_open(m):
                raise ValueError(f"cover member {points_of(m)} is not open")
            union |= m
        if union != self.space.carrier:
            raise ValueError("members do not cover the carrier")

    def star(self, mask: int, k: int = 1) -> int:
        """k-fold star: union the members meeting the current set, k times."""
        if mask & ~full_mask(self.space.n):
            raise ValueError("point set outside the carrier")
        current = mask
        for _ in range(k):
            nxt = 0
            for m in self.members:
                if m & current:
                    nxt |= m
            current = nxt
        return current

    def refines(self, coarse: "OpenCover") -> bool:
        """Every member here sits inside some member of the coarse cover."""
        if self.space != coarse.space:
            raise ValueError("covers live on different spaces")
        return all(
            any(fine & ~big == 0 for big in coarse.members) for fine in self.members
        )


def minimal_cover(space: FiniteSpace) -> OpenCover:
    """The cover by distinct minimal open sets; refines every open cover."""
    if space.n == 0:
        return OpenCover(space, ())
    return OpenCover(space, tuple(sorted(set(space.min_open))))


def enumerate_covers(
    space: FiniteSpace,
    antichain_only: bool = True,
    max_n: int = 4,
) -> Iterator[OpenCover]:
    """Every cover by distinct nonempty open sets, optionally restricted to
    inclusion antichains (no member inside another member).

    Dropping a member contained in another member changes no star, so the
    antichain covers decide every star/subcover optimum; the unrestricted
    enumeration is kept for validating exactly that at tiny sizes.
    """
    if space.n > max_n:
        raise BudgetExceeded(f"cover enumeration requires n <= {max_n}")
    if space.n == 0:
        yield OpenCover(space, ())
        return
    opens = [o for o in space.opens() if o]
    full = space.carrier
    suffix_union = [0] * (len(opens) + 1)
    for i in range(len(opens) - 1, -1, -1):
        suffix_union[i] = suffix_union[i + 1] | opens[i]
    chosen: list[int] = []

    def is_antichain_with(m: int) -> bool:
        return all(m & ~o and o & ~m for o in chosen)

    def extend(i: int, union: int) -> Iterator[OpenCover]:
        if union | suffix_union[i] != full:
            return
        if i == len(opens):
            yield OpenCover(space, tuple(chosen))
            return
        yield from extend(i + 1, union)
        if not antichain_only or is_antichain_with(opens[i]):
            chosen.append(opens[i])
            yield from extend(i + 1, union | opens[i])
            chosen.pop()

    yield from extend(0, 0)


def enumerate_irredundant_covers(space: FiniteSpace, max_n: int = 4) -> Iterator[OpenCover]:
    """Antichain covers of distinct nonempty opens (the oracle's cover pool)."""
    return enumerate_covers(space, antichain_only=True, max_n=max_n)
