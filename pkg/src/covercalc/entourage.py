"""Reflexive binary relations on a finite carrier.

An :class:`Entourage` is a relation on points ``0..n-1`` that contains the
diagonal.  Rows are stored as int bitmasks (``rows[x]`` = the ball of x), so
composition is a union of rows and all Boolean operations are single int
ops.  Values are immutable and hashable.

Composition follows the displayed convention ``(x, z) in UV iff there is y
with (x, y) in U and (y, z) in V``; directed powers along a word accumulate
factors left to right, so the power at a concatenation is the composition
of the powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bitset import full_mask, iter_bits, points_of
from .words import MINUS_FIRST, PLUS, Word


class CarrierMismatch(ValueError):
    """Two entourages on different carriers were combined."""


@dataclass(frozen=True)
class Entourage:
    """Reflexive relation stored as one bitmask row per point."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = full_mask(self.n)
        for x, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {x} mentions points outside the carrier")
            if not row >> x & 1:
                raise ValueError(f"missing diagonal pair ({x}, {x})")

    # -- constructors ------------------------------------------------------

    @classmethod
    def diagonal(cls, n: int) -> "Entourage":
        return cls(n, tuple(1 << x for x in range(n)))

    @classmethod
    def all_pairs(cls, n: int) -> "Entourage":
        full = full_mask(n)
        return cls(n, tuple(full for _ in range(n)))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Entourage":
        """Relation containing the diagonal plus the given (x, y) pairs."""
        rows = [1 << x for x in range(n)]
        for x, y in pairs:
            rows[x] |= 1 << y
        return cls(n, tuple(rows))

    # -- relation algebra --------------------------------------------------

    def _check(self, other: "Entourage") -> None:
        if self.n != other.n:
            raise CarrierMismatch(f"carrier sizes differ: {self.n} != {other.n}")

    def contains_pair(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def inverse(self) -> "Entourage":
        rows = [0] * self.n
        for x, row in enumerate(self.rows):
            bit = 1 << x
            for y in iter_bits(row):
                rows[y] |= bit
        return Entourage(self.n, tuple(rows))

    def compose(self, other: "Entourage") -> "Entourage":
        """(x, z) in result iff some y has (x, y) in self and (y, z) in other."""
        self._check(other)
        orows = other.rows
        rows = []
        for row in self.rows:
            acc = 0
            for y in iter_bits(row):
                acc |= orows[y]
            rows.append(acc)
        return Entourage(self.n, tuple(rows))

    __matmul__ = compose

    def union(self, other: "Entourage") -> "Entourage":
        self._check(other)
        return Entourage(self.n, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def intersect(self, other: "Entourage") -> "Entourage":
        self._check(other)
        return Entourage(self.n, tuple(a & b for a, b in zip(self.rows, other.rows)))

    __or__ = union
    __and__ = intersect

    def subset(self, other: "Entourage") -> bool:
        self._check(other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    __le__ = subset

    def is_symmetric(self) -> bool:
        return self == self.inverse()

    def is_transitive(self) -> bool:
        return self.compose(self).subset(self)

    def is_equivalence(self) -> bool:
        return self.is_symmetric() and self.is_transitive()

    # -- balls and powers ----------------------------------------------------

    def ball(self, points_mask: int) -> int:
        """Union of the rows indexed by the mask."""
        if points_mask & ~full_mask(self.n):
            raise ValueError("point set outside the carrier")
        acc = 0
        for x in iter_bits(points_mask):
            acc |= self.rows[x]
        return acc

    def verbal_power(self, word: Word) -> "Entourage":
        """Directed power along a word: '+' composes with self, '-' with
        the inverse, in word order; the empty word gives the diagonal."""
        acc = Entourage.diagonal(self.n)
        inv: Entourage | None = None
        for ch in word:
            if ch == PLUS:
                acc = acc.compose(self)
            else:
                if inv is None:
                    inv = self.inverse()
                acc = acc.compose(inv)
        return acc

    def power(self, k: int) -> "Entourage":
        acc = Entourage.diagonal(self.n)
        for _ in range(k):
            acc = acc.compose(self)
        return acc

    def stabilized_equivalence(self) -> tuple["Entourage", int]:
        """Least equivalence containing self, with its stabilization index.

        Iterates W = (self^-1 self) to the least k >= 1 with W^k = W^(k+1);
        the stable power is reflexive, symmetric and transitive, and equals
        the equivalence closure of self.
        """
        w = self.inverse().compose(self)
        current = w
        k = 1
        while True:
            nxt = current.compose(w)
            if nxt == current:
                return current, k
            current = nxt
            k += 1

    def equivalence_class_count(self) -> int:
        """Number of classes, assuming self is an equivalence relation."""
        seen = 0
        count = 0
        for x in range(self.n):
            if not seen >> x & 1:
                count += 1
                seen |= self.rows[x]
        return count

    # -- interchange ---------------------------------------------------------

    def to_json(self) -> dict:
        """Off-diagonal pairs only; the diagonal is implicit."""
        pairs = [
            [x, y]
            for x in range(self.n)
            for y in points_of(self.rows[x])
            if x != y
        ]
        return {"n": self.n, "pairs": pairs}

    @classmethod
    def from_json(cls, data: dict) -> "Entourage":
        return cls.from_pairs(int(data["n"]), [(int(x), int(y)) for x, y in data["pairs"]])


def minus_plus_power(u: Entourage, k: int) -> Entourage:
    """The alternating power along the length-2k word '-+-+...'."""
    return u.verbal_power(Word.alternating(MINUS_FIRST, 2 * k))
