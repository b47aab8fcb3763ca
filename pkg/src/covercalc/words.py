"""Binary words over the alphabet {+, -}.

Words index the directed powers of a relation: each ``+`` composes with the
relation itself, each ``-`` with its inverse.  The module provides the free
monoid structure (concatenation, empty word), the subword (subsequence)
order, the strictly alternating words, and run collapsing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby

PLUS = "+"
MINUS = "-"

PLUS_FIRST = PLUS
MINUS_FIRST = MINUS

_ALPHABET = {PLUS, MINUS}


@dataclass(frozen=True)
class Word:
    """Immutable word over {+, -}; the empty word is the monoid unit."""

    letters: str = ""

    def __post_init__(self) -> None:
        bad = set(self.letters) - _ALPHABET
        if bad:
            raise ValueError(f"letters must be '+' or '-', got {sorted(bad)!r}")

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse ASCII text; 'e' (or '') denotes the empty word."""
        if text in ("e", ""):
            return cls("")
        return cls(text)

    @classmethod
    def alternating(cls, first: str, n: int) -> "Word":
        """The length-n strictly alternating word starting with ``first``.

        Defined by the recursion: the length-0 word is empty, and the
        length-(n+1) word starting with a sign is that sign followed by the
        length-n word starting with the opposite sign.
        """
        if first not in _ALPHABET:
            raise ValueError(f"first letter must be '+' or '-', got {first!r}")
        if n < 0:
            raise ValueError("length must be non-negative")
        out = []
        sign = first
        for _ in range(n):
            out.append(sign)
            sign = MINUS if sign == PLUS else PLUS
        return cls("".join(out))

    def concat(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    __add__ = concat

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return self.letters or "e"

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def is_subword_of(self, other: "Word") -> bool:
        """Subsequence test: self arises from other by deleting letters.

        This is the order-preserving reading; an order-forgetting injection
        would accept e.g. "+-" inside "-+", under which monotonicity of
        directed powers fails (see the relation-algebra tests).
        """
        it = iter(other.letters)
        return all(ch in it for ch in self.letters)

    def collapse_runs(self) -> "Word":
        """Replace each maximal run of equal letters by a single letter."""
        return Word("".join(ch for ch, _ in groupby(self.letters)))

    def alternates(self) -> bool:
        return all(a != b for a, b in zip(self.letters, self.letters[1:]))


EMPTY = Word("")


def all_words(max_len: int) -> list[Word]:
    """Every word of length <= max_len, shortest first, '+' before '-'."""
    out = [EMPTY]
    frontier = [EMPTY]
    for _ in range(max_len):
        frontier = [w + Word(ch) for w in frontier for ch in (PLUS, MINUS)]
        out.extend(frontier)
    return out
