"""Exact combinatorial kernels: minimum set cover / hitting set and maximum
hereditary subsets, with deterministic certified witnesses.

All universes are bitmasks over at most 64 points (the harness never needs
more).  Solving is two-phase: a branch-and-bound search pins the optimal
size, then an ordered depth-first search recovers the lexicographically
least witness of that size, so identical instances always yield identical
witnesses.  Every returned witness is re-checked for feasibility before it
leaves the solver.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .bitset import iter_bits

MIN_COVER = "MIN_COVER"
MIN_HITTING = "MIN_HITTING"

MAX_UNIVERSE = 64


class Infeasible(ValueError):
    """The instance admits no solution."""


@dataclass(frozen=True)
class CoverInstance:
    """Cover or hit a bitmask universe with/against candidate bitmask sets."""

    universe: int
    sets: tuple[int, ...]
    objective: str = MIN_COVER

    def __post_init__(self) -> None:
        if self.universe.bit_length() > MAX_UNIVERSE:
            raise ValueError(f"universe larger than {MAX_UNIVERSE} points")
        if self.objective not in (MIN_COVER, MIN_HITTING):
            raise ValueError(f"unknown objective {self.objective!r}")


@dataclass(frozen=True)
class Solution:
    size: int
    witness: tuple[int, ...]


def _greedy_cover(universe: int, sets: Sequence[int]) -> list[int]:
    chosen = []
    remaining = universe
    while remaining:
        best, best_gain = -1, 0
        for i, s in enumerate(sets):
            gain = (s & remaining).bit_count()
            if gain > best_gain:
                best, best_gain = i, gain
        if best < 0:
            raise Infeasible("universe is not covered by the candidate sets")
        chosen.append(best)
        remaining &= ~sets[best]
    return chosen


def _cover_optimum(universe: int, sets: Sequence[int]) -> int:
    """Branch and bound on the number of chosen sets.

    Branches on the uncovered element with the fewest available covers;
    candidates restricted to the remainder are dominance-pruned (a set whose
    remaining part sits inside another candidate's never helps the count).
    """
    if universe == 0:
        return 0
    covers_of = {}
    for e in iter_bits(universe):
        covering = [i for i, s in enumerate(sets) if s >> e & 1]
        if not covering:
            raise Infeasible(f"element {e} is covered by no candidate set")
        covers_of[e] = covering

    best = len(_greedy_cover(universe, sets))

    def bound(remaining: int) -> int:
        if not remaining:
            return 0
        biggest = 0
        for s in sets:
            got = (s & remaining).bit_count()
            if got > biggest:
                biggest = got
        return -(-remaining.bit_count() // biggest)

    def dfs(remaining: int, used: int) -> None:
        nonlocal best
        if remaining == 0:
            if used < best:
                best = used
            return
        if used + bound(remaining) >= best:
            return
        pivot = min(iter_bits(remaining), key=lambda e: len(covers_of[e]))
        options = covers_of[pivot]
        restricted = [(i, sets[i] & remaining) for i in options]
        for i, part in restricted:
            if any(
                j != i and part & ~other == 0 and (part != other or j < i)
                for j, other in restricted
            ):
                continue  # dominated by another branch at this pivot
            dfs(remaining & ~sets[i], used + 1)

    dfs(universe, 0)
    return best


def _lex_least_cover(universe: int, sets: Sequence[int], size: int) -> tuple[int, ...]:
    """First size-`size` cover in lexicographic order of sorted index tuples.

    A minimum cover never goes empty-handed early (a covering proper prefix
    would be a smaller cover), so completion exactly at `size` is implied.
    """
    m = len(sets)
    suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] | sets[i]
    max_gain = max((s.bit_count() for s in sets), default=1) or 1

    chosen: list[int] = []

    def dfs(start: int, remaining: int) -> bool:
        if remaining == 0:
            return True
        budget = size - len(chosen)
        if budget == 0 or remaining & ~suffix[start]:
            return False
        if -(-remaining.bit_count() // max_gain) > budget:
            return False
        for i in range(start, m):
            if sets[i] & remaining:
                chosen.append(i)
                if dfs(i + 1, remaining & ~sets[i]):
                    return True
                chosen.pop()
        return False

    if not dfs(0, universe):
        raise AssertionError("no cover of the optimal size found (internal error)")
    return tuple(chosen)


def min_cover(instance: CoverInstance) -> Solution:
    """Optimal cover/hitting solution with the lexicographically least witness."""
    if instance.objective == MIN_HITTING:
        return _min_hitting(instance)
    universe, sets = instance.universe, instance.sets
    size = _cover_optimum(universe, sets)
    witness = _lex_least_cover(universe, sets, size) if size else ()
    covered = 0
    for i in witness:
        covered |= sets[i]
    if len(witness) != size or covered & universe != universe:
        raise AssertionError("cover certificate failed re-verification")
    return Solution(size, witness)


def _min_hitting(instance: CoverInstance) -> Solution:
    """Transpose to a cover problem: element e covers the sets containing e."""
    sets = instance.sets
    if any(s == 0 for s in sets):
        raise Infeasible("an empty set cannot be hit")
    elements = sorted(iter_bits(instance.universe))
    transposed = []
    for e in elements:
        mask = 0
        for i, s in enumerate(sets):
            if s >> e & 1:
                mask |= 1 << i
        transposed.append(mask)
    target = (1 << len(sets)) - 1
    inner = min_cover(CoverInstance(target, tuple(transposed), MIN_COVER))
    witness = tuple(elements[i] for i in inner.witness)
    for s in sets:
        if not any(s >> e & 1 for e in witness):
            raise AssertionError("hitting certificate failed re-verification")
    return Solution(inner.size, witness)


# -- maximum hereditary subsets -------------------------------------------------

# Feasibility predicates over point masks.  Each is hereditary (every subset
# of a feasible set is feasible), which the search relies on for pruning:
#   DISCRETE_SUBSPACE       U_d & D == {d} for d in D; restricting D keeps it.
#   CLOSED_DISCRETE         adds U_y & D == 0 for y outside D; removing a point
#                           d from D removes it from every U_y & D as well, and
#                           U_d & D' is empty or {d}' -- see the tests.
#   DISCRETE_SINGLETON_FAMILY  |U_z & A| <= 1 for all z; monotone in A.
#   DISJOINT_MIN_OPENS      pairwise disjointness survives subsets.
#   DISCRETE_MIN_OPENS      each U_z meets at most one chosen U_a; monotone.


def _discrete_subspace(space, mask: int) -> bool:
    return all(space.min_open[d] & mask == 1 << d for d in iter_bits(mask))


def _closed_discrete(space, mask: int) -> bool:
    if not _discrete_subspace(space, mask):
        return False
    return space.is_closed(mask)


def _discrete_singleton_family(space, mask: int) -> bool:
    return all((u & mask).bit_count() <= 1 for u in space.min_open)


def _disjoint_min_opens(space, mask: int) -> bool:
    seen = 0
    for a in iter_bits(mask):
        u = space.min_open[a]
        if u & seen:
            return False
        seen |= u
    return True


def _discrete_min_opens(space, mask: int) -> bool:
    chosen = [space.min_open[a] for a in iter_bits(mask)]
    for z in range(space.n):
        uz = space.min_open[z]
        if sum(1 for u in chosen if u & uz) > 1:
            return False
    return True


PREDICATES: dict[str, Callable] = {
    "DISCRETE_SUBSPACE": _discrete_subspace,
    "CLOSED_DISCRETE": _closed_discrete,
    "DISCRETE_SINGLETON_FAMILY": _discrete_singleton_family,
    "DISJOINT_MIN_OPENS": _disjoint_min_opens,
    "DISCRETE_MIN_OPENS": _discrete_min_opens,
}


@dataclass(frozen=True)
class SubsetInstance:
    """Maximize |A| over point masks A satisfying a hereditary predicate."""

    space: object
    predicate: str
    candidates: int = field(default=-1)

    def feasible(self, mask: int) -> bool:
        return PREDICATES[self.predicate](self.space, mask)

    def candidate_mask(self) -> int:
        if self.candidates >= 0:
            return self.candidates
        return self.space.carrier


def max_subset(instance: SubsetInstance) -> Solution:
    """Largest feasible mask, ties broken toward the lexicographically least
    witness (as a sorted point tuple)."""
    if instance.predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {instance.predicate!r}")
    points = sorted(iter_bits(instance.candidate_mask()))
    feasible = instance.feasible
    if not feasible(0):
        raise AssertionError("the empty set must be feasible")

    best = 0

    def grow(idx: int, mask: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + len(points) - idx <= best:
            return
        for j in range(idx, len(points)):
            cand = mask | 1 << points[j]
            if feasible(cand):
                grow(j + 1, cand, size + 1)

    grow(0, 0, 0)

    chosen: list[int] = []

    def find(idx: int, mask: int) -> bool:
        if len(chosen) == best:
            return True
        if len(chosen) + len(points) - idx < best:
            return False
        for j in range(idx, len(points)):
            cand = mask | 1 << points[j]
            if feasible(cand):
                chosen.append(points[j])
                if find(j + 1, cand):
                    return True
                chosen.pop()
        return False

    find(0, 0)
    witness_mask = 0
    for p in chosen:
        witness_mask |= 1 << p
    if len(chosen) != best or not feasible(witness_mask):
        raise AssertionError("subset certificate failed re-verification")
    return Solution(best, tuple(chosen))
