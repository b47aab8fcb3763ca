"""Finite topological spaces in minimal-open-set form.

A finite space is canonically the table of minimal open sets ``U_x`` (the
intersection of all opens containing x).  The table determines the topology
(opens are exactly the unions of minimal opens) and satisfies the coherence
law ``y in U_x  =>  U_y subset of U_x``; equivalently, the relation
``x -> U_x`` is a reflexive transitive entourage, the *minimal entourage*
of the space.  All invariants in this package reduce to that table.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .bitset import full_mask, iter_bits, mask_of, points_of
from .entourage import Entourage


class NotATopology(ValueError):
    """Input fails a topology axiom; carries a witness when available."""

    def __init__(self, message: str, witness: tuple | None = None):
        super().__init__(message)
        self.witness = witness


class BudgetExceeded(RuntimeError):
    """An exhaustive operation was asked to exceed its size bound."""


class UnknownName(ValueError):
    """Unrecognised named-space spec."""


@dataclass(frozen=True)
class FiniteSpace:
    """Finite space given by its per-point minimal open sets (as masks)."""

    n: int
    min_open: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if len(self.min_open) != self.n:
            raise NotATopology(f"expected {self.n} minimal opens, got {len(self.min_open)}")
        full = full_mask(self.n)
        for x, u in enumerate(self.min_open):
            if u & ~full:
                raise NotATopology(f"minimal open of {x} leaves the carrier")
            if not u >> x & 1:
                raise NotATopology(f"point {x} not in its own minimal open", witness=(x,))
        for x, u in enumerate(self.min_open):
            for y in iter_bits(u):
                if self.min_open[y] & ~u:
                    raise NotATopology(
                        f"coherence fails: {y} in U_{x} but U_{y} not inside U_{x}",
                        witness=(x, y),
                    )
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels length must match carrier size")

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_min_open_sets(cls, sets: Sequence[Iterable[int]], labels=None) -> "FiniteSpace":
        return cls(len(sets), tuple(mask_of(s) for s in sets),
                   tuple(labels) if labels else None)

    @classmethod
    def from_open_sets(cls, n: int, opens: Iterable[Iterable[int]]) -> "FiniteSpace":
        """Build from a full open-set family, validating the axioms strictly.

        The family must contain the empty set and the carrier and be closed
        under binary union and intersection; nothing is auto-completed.
        """
        family = sorted({mask_of(o) for o in opens})
        full = full_mask(n)
        if any(m & ~full for m in family):
            raise NotATopology("an open set leaves the carrier")
        if 0 not in family:
            raise NotATopology("the empty set is missing")
        if full not in family:
            raise NotATopology("the full carrier is missing")
        fam = set(family)
        for a in family:
            for b in family:
                if a < b:
                    if a | b not in fam:
                        raise NotATopology(
                            f"not closed under union: {points_of(a)} | {points_of(b)}",
                            witness=(points_of(a), points_of(b)),
                        )
                    if a & b not in fam:
                        raise NotATopology(
                            f"not closed under intersection: {points_of(a)} & {points_of(b)}",
                            witness=(points_of(a), points_of(b)),
                        )
        min_open = []
        for x in range(n):
            u = full
            for m in family:
                if m >> x & 1:
                    u &= m
            min_open.append(u)
        space = cls(n, tuple(min_open))
        derived = set(space.opens())
        if fam != derived:
            extra = sorted(fam - derived)
            raise NotATopology(
                f"open set {points_of(extra[0])} is not a union of minimal opens",
                witness=(points_of(extra[0]),),
            )
        return space

    @classmethod
    def from_preorder(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "FiniteSpace":
        """Reflexive-transitive closure of edges; U_x = everything reachable
        from x.  The result satisfies the coherence law by construction."""
        rows = [1 << x for x in range(n)]
        for x, y in edges:
            rows[x] |= 1 << y
        changed = True
        while changed:
            changed = False
            for x in range(n):
                acc = rows[x]
                for y in iter_bits(rows[x]):
                    acc |= rows[y]
                if acc != rows[x]:
                    rows[x] = acc
                    changed = True
        return cls(n, tuple(rows), tuple(labels) if labels else None)

    # -- basic structure -------------------------------------------------------

    @property
    def carrier(self) -> int:
        return full_mask(self.n)

    def minimal_entourage(self) -> Entourage:
        """The least neighborhood assignment: the ball of x is exactly U_x."""
        return Entourage(self.n, self.min_open)

    def is_open(self, mask: int) -> bool:
        return all(self.min_open[x] & ~mask == 0 for x in iter_bits(mask))

    def opens(self) -> Iterator[int]:
        """All open sets (unions of minimal opens), each exactly once.

        Exponential in general; fine for the carrier sizes this package
        targets (the harness keeps n small).
        """
        seen = {0}
        yield 0
        frontier = [0]
        distinct = sorted(set(self.min_open))
        while frontier:
            nxt = []
            for base in frontier:
                for u in distinct:
                    m = base | u
                    if m not in seen:
                        seen.add(m)
                        nxt.append(m)
                        yield m
            frontier = nxt

    def closure(self, mask: int) -> int:
        """Points whose minimal open meets the set."""
        acc = 0
        for z in range(self.n):
            if self.min_open[z] & mask:
                acc |= 1 << z
        return acc

    def interior(self, mask: int) -> int:
        acc = 0
        for x in iter_bits(mask):
            if self.min_open[x] & ~mask == 0:
                acc |= 1 << x
        return acc

    def is_dense(self, mask: int) -> bool:
        return self.closure(mask) == self.carrier

    def is_closed(self, mask: int) -> bool:
        return self.closure(mask) == mask

    def closed_sets(self) -> Iterator[int]:
        full = self.carrier
        for o in self.opens():
            yield full & ~o

    def subspace(self, mask: int) -> "FiniteSpace":
        """Subspace on the points of the mask, reindexed in ascending order."""
        pts = points_of(mask)
        index = {p: i for i, p in enumerate(pts)}
        rows = []
        for p in pts:
            rows.append(mask_of(index[q] for q in iter_bits(self.min_open[p] & mask)))
        labels = tuple(self.labels[p] for p in pts) if self.labels else None
        return FiniteSpace(len(pts), tuple(rows), labels)

    # -- predicates -----------------------------------------------------------

    def is_discrete(self) -> bool:
        return all(u == 1 << x for x, u in enumerate(self.min_open))

    def is_t1(self) -> bool:
        """Every singleton closed; on finite carriers this forces discreteness."""
        t1 = all(self.closure(1 << x) == 1 << x for x in range(self.n))
        assert not t1 or self.is_discrete()
        return t1

    def is_partition_topology(self) -> bool:
        return self.minimal_entourage().is_symmetric()

    def is_quasi_regular(self) -> bool:
        """Every nonempty open contains the closure of a nonempty open subset.

        Checked on minimal opens only, which suffices: a witness inside U_x
        works for every open containing x, and witnesses may be shrunk to
        minimal opens.
        """
        for x in range(self.n):
            u = self.min_open[x]
            if not any(
                self.min_open[y] & ~u == 0 and self.closure(self.min_open[y]) & ~u == 0
                for y in iter_bits(u)
            ):
                return False
        return True

    def is_normal(self) -> bool:
        """Disjoint closed sets have disjoint open neighborhoods.

        The least open neighborhood of a closed set F is the union of the
        minimal opens of its points, so only those need to be compared.
        """
        closed = [c for c in self.closed_sets() if c]
        hulls = {c: self.minimal_entourage().ball(c) for c in closed}
        for i, f in enumerate(closed):
            for g in closed[i + 1:]:
                if f & g == 0 and hulls[f] & hulls[g]:
                    return False
        return True

    def is_collectively_hausdorff(self) -> bool:
        """Discrete families of sets admit discrete open swellings.

        Reduces to pairs of points: a family is discrete iff member closures
        are pairwise disjoint, and the least open swelling of F is the union
        of minimal opens over F, so the condition is exactly that disjoint
        point closures force disjoint closures of the minimal opens.
        """
        cl_pt = [self.closure(1 << x) for x in range(self.n)]
        cl_open = [self.closure(u) for u in self.min_open]
        for x in range(self.n):
            for y in range(x + 1, self.n):
                if cl_pt[x] & cl_pt[y] == 0 and cl_open[x] & cl_open[y]:
                    return False
        return True

    # -- Pervin entourages ------------------------------------------------------

    def pervin_entourage(self, open_mask: int) -> Entourage:
        """(O x O) union ((X \\ O) x X) for an open O."""
        if not self.is_open(open_mask):
            raise NotATopology(f"{points_of(open_mask)} is not open", witness=(points_of(open_mask),))
        full = self.carrier
        rows = tuple(open_mask if open_mask >> x & 1 else full for x in range(self.n))
        return Entourage(self.n, rows)

    def pervin_minimum(self, max_n: int = 16) -> Entourage:
        """Intersection of the Pervin entourages over all open sets.

        Enumerates the whole open family, so it is budget-guarded; it always
        coincides with the minimal entourage, which the harness checks.
        """
        if self.n > max_n:
            raise BudgetExceeded(f"pervin_minimum enumerates all opens; n <= {max_n} required")
        acc = Entourage.all_pairs(self.n)
        for o in self.opens():
            acc = acc.intersect(self.pervin_entourage(o))
        return acc

    # -- interchange ---------------------------------------------------------

    def to_json(self) -> dict:
        data: dict = {
            "n": self.n,
            "min_open": [list(points_of(u)) for u in self.min_open],
        }
        if self.labels is not None:
            data["labels"] = list(self.labels)
        return data

    @classmethod
    def from_json(cls, data: dict) -> "FiniteSpace":
        n = int(data["n"])
        labels = tuple(data["labels"]) if "labels" in data and data["labels"] else None
        if "min_open" in data:
            return cls(n, tuple(mask_of(map(int, s)) for s in data["min_open"]), labels)
        if "preorder_edges" in data:
            edges = [(int(x), int(y)) for x, y in data["preorder_edges"]]
            return cls.from_preorder(n, edges, labels)
        raise NotATopology("space JSON needs 'min_open' or 'preorder_edges'")


def generate_topology(n: int, subbasis: Iterable[Iterable[int]]) -> FiniteSpace:
    """Space generated by an arbitrary subbasis (closure is taken here;
    contrast with :meth:`FiniteSpace.from_open_sets`, which never completes)."""
    masks = [mask_of(s) for s in subbasis]
    full = full_mask(n)
    if any(m & ~full for m in masks):
        raise NotATopology("a subbasis set leaves the carrier")
    min_open = []
    for x in range(n):
        u = full
        for m in masks:
            if m >> x & 1:
                u &= m
        min_open.append(u)
    return FiniteSpace(n, tuple(min_open))


# -- generators ---------------------------------------------------------------


def random_space(n: int, edge_probability: float, seed) -> FiniteSpace:
    """Reflexive-transitive closure of a random digraph.

    The probability applies to each ordered pair before closure; closure
    only adds edges, so post-closure density is higher than the parameter.
    """
    rng = random.Random(f"space:{seed}")
    edges = [
        (x, y)
        for x in range(n)
        for y in range(n)
        if x != y and rng.random() < edge_probability
    ]
    return FiniteSpace.from_preorder(n, edges)


def enumerate_all_spaces(n: int, max_n: int = 6) -> Iterator[FiniteSpace]:
    """Every labeled topology on n points exactly once.

    Backtracks over minimal-open tables satisfying the coherence law; the
    count (1, 4, 29, 355 for n = 1..4) is cross-checked elsewhere against a
    closure-free count of reflexive transitive relations.
    """
    if n > max_n:
        raise BudgetExceeded(f"enumerate_all_spaces is exhaustive; n <= {max_n} required")
    if n == 0:
        yield FiniteSpace(0, ())
        return
    candidates = [
        sorted({m | (1 << x) for m in range(1 << n)})
        for x in range(n)
    ]

    rows: list[int] = []

    def coherent_with_prefix(x: int, u: int) -> bool:
        for y in range(x):
            if u >> y & 1 and rows[y] & ~u:
                return False
            if rows[y] >> x & 1 and u & ~rows[y]:
                return False
        return True

    def extend(x: int) -> Iterator[FiniteSpace]:
        if x == n:
            # full coherence holds pairwise by construction
            yield FiniteSpace(n, tuple(rows))
            return
        for u in candidates[x]:
            if coherent_with_prefix(x, u):
                rows.append(u)
                yield from extend(x + 1)
                rows.pop()

    yield from extend(0)


def count_reflexive_transitive_relations(n: int, max_n: int = 4) -> int:
    """Closure-free count of reflexive transitive relations on n points.

    Iterates every off-diagonal edge pattern and tests transitivity directly;
    independent of the backtracking enumerator by construction.
    """
    if n > max_n:
        raise BudgetExceeded(f"brute-force relation count requires n <= {max_n}")
    if n == 0:
        return 1
    offdiag = [(x, y) for x in range(n) for y in range(n) if x != y]
    count = 0
    for pattern in range(1 << len(offdiag)):
        rows = [1 << x for x in range(n)]
        for i, (x, y) in enumerate(offdiag):
            if pattern >> i & 1:
                rows[x] |= 1 << y
        ok = True
        for x in range(n):
            for y in iter_bits(rows[x]):
                if rows[y] & ~rows[x]:
                    ok = False
                    break
            if not ok:
                break
        count += ok
    return count


def sierpinski() -> FiniteSpace:
    return FiniteSpace(2, (0b11, 0b10))


def discrete(n: int) -> FiniteSpace:
    return FiniteSpace(n, tuple(1 << x for x in range(n)))


def antidiscrete(n: int) -> FiniteSpace:
    full = full_mask(n)
    return FiniteSpace(n, tuple(full for _ in range(n)))


def chain(n: int) -> FiniteSpace:
    """U_x = {x, x+1, ..., n-1}; chain(2) is the Sierpinski space."""
    full = full_mask(n)
    return FiniteSpace(n, tuple(full & ~((1 << x) - 1) for x in range(n)))


def zigzag(n: int) -> FiniteSpace:
    """Fence: even points open up to their odd neighbors, odd points isolatedly
    open; zigzag(3) has U_0 = {0,1}, U_1 = {1}, U_2 = {1,2}."""
    rows = []
    for x in range(n):
        u = 1 << x
        if x % 2 == 0:
            if x - 1 >= 0:
                u |= 1 << (x - 1)
            if x + 1 < n:
                u |= 1 << (x + 1)
        rows.append(u)
    return FiniteSpace(n, tuple(rows))


def one_nonisolated(n: int) -> FiniteSpace:
    """All points isolated except the last, whose least neighborhood is the
    whole carrier."""
    if n == 0:
        return FiniteSpace(0, ())
    rows = [1 << x for x in range(n - 1)]
    rows.append(full_mask(n))
    return FiniteSpace(n, tuple(rows))


def partition_space(block_sizes: Sequence[int]) -> FiniteSpace:
    """Partition topology with consecutive blocks of the given sizes."""
    n = sum(block_sizes)
    rows = []
    start = 0
    for size in block_sizes:
        if size <= 0:
            raise ValueError("block sizes must be positive")
        block = mask_of(range(start, start + size))
        rows.extend(block for _ in range(size))
        start += size
    return FiniteSpace(n, tuple(rows))


def named(spec: str) -> FiniteSpace:
    """Build a named space from an inline "name:params" spec.

    Known names: sierpinski, discrete:n, antidiscrete:n, chain:n, zigzag:n,
    one_nonisolated:n, partition:s1,s2,...  (block sizes).
    """
    name, _, params = spec.partition(":")
    try:
        if name == "sierpinski":
            return sierpinski()
        if name == "partition":
            return partition_space([int(p) for p in params.split(",") if p != ""])
        makers = {
            "discrete": discrete,
            "antidiscrete": antidiscrete,
            "chain": chain,
            "zigzag": zigzag,
            "one_nonisolated": one_nonisolated,
        }
        if name in makers:
            if params == "":
                raise UnknownName(f"{name} needs a size parameter, e.g. {name}:3")
            return makers[name](int(params))
    except ValueError as exc:
        raise UnknownName(f"bad parameters in {spec!r}: {exc}") from exc
    raise UnknownName(f"unknown space name {name!r}")
