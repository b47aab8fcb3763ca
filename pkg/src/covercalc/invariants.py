"""Exact covering-type invariants of finite spaces.

Everything is computed from the minimal-open table through two reductions,
each of which is cross-checked by a brute-force oracle in this module:

* cover-quantified invariants are evaluated on the minimal cover only (it
  refines every cover, and finer covers make star/subcover demands harder);
* entourage-quantified invariants are evaluated on the minimal entourage
  only (it sits below every neighborhood assignment, and smaller entourages
  make ball-cover demands harder).

Values are exact naturals certified by the solver; for finite carriers the
"strictly fewer than" variants exceed the "at most" variants by one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .bitset import full_mask, iter_bits, points_of, subsets_of
from .cover import OpenCover, enumerate_covers, minimal_cover
from .entourage import Entourage
from .solver import (
    MIN_COVER,
    MIN_HITTING,
    CoverInstance,
    Solution,
    SubsetInstance,
    max_subset,
    min_cover,
)
from .space import BudgetExceeded, FiniteSpace
from .words import MINUS_FIRST, PLUS_FIRST, Word

CLASSICAL_NAMES = ("d", "c", "dc", "e", "de", "s", "l", "w", "nw", "chi", "ld", "hl", "hd", "hs")

VERBAL_KINDS = ("ell", "L", "ell_bar", "L_bar")
STAR_KINDS = ("l", "L", "lbar", "Lbar")

HEREDITARY_EXHAUSTIVE_MAX = 15
HEREDITARY_SAMPLES = 10_000

_PREDICATE_OF = {
    "s": "DISCRETE_SUBSPACE",
    "e": "CLOSED_DISCRETE",
    "de": "DISCRETE_SINGLETON_FAMILY",
    "c": "DISJOINT_MIN_OPENS",
    "dc": "DISCRETE_MIN_OPENS",
}


def _normalize_index(index) -> int:
    """Star index as twice its value; accepts ints and exact halves."""
    doubled = round(2 * float(index))
    if doubled < 0 or abs(2 * float(index) - doubled) > 1e-9:
        raise ValueError(f"star index must be a non-negative half-integer, got {index!r}")
    return doubled


def format_star_index(index) -> str:
    doubled = _normalize_index(index)
    return str(doubled // 2) if doubled % 2 == 0 else f"{doubled // 2}.5"


class SpaceInvariants:
    """Memoized invariant computations for one space."""

    def __init__(self, space: FiniteSpace):
        self.space = space
        self._memo: dict = {}

    # -- shared building blocks ------------------------------------------------

    def _cached(self, key, producer):
        if key not in self._memo:
            self._memo[key] = producer()
        return self._memo[key]

    @property
    def minimal_entourage(self) -> Entourage:
        return self._cached("V", self.space.minimal_entourage)

    @property
    def cover(self) -> OpenCover:
        return self._cached("cover", lambda: minimal_cover(self.space))

    def verbal_entourage(self, word: Word) -> Entourage:
        return self._cached(
            ("power", word.letters),
            lambda: self.minimal_entourage.verbal_power(word),
        )

    def _ball_cover(self, ent: Entourage, dense: bool = False) -> Solution:
        """Least set of centers whose balls cover (or are dense in) the space."""
        rows = ent.rows
        if dense:
            rows = tuple(self.space.closure(r) for r in rows)
        return min_cover(CoverInstance(self.space.carrier, rows, MIN_COVER))

    # -- classical invariants ----------------------------------------------------

    def classical(self, name: str, allow_sampled: bool = False) -> int:
        return self.classical_solution(name, allow_sampled)[0]

    def classical_solution(self, name: str, allow_sampled: bool = False):
        """Value plus witness payload for one classical invariant."""
        if name not in CLASSICAL_NAMES:
            raise ValueError(f"unknown classical invariant {name!r}")
        key = ("classical", name)
        if key in self._memo:
            return self._memo[key]
        space = self.space
        if name == "d":
            sol = min_cover(CoverInstance(space.carrier, space.min_open, MIN_HITTING))
            out = (sol.size, list(sol.witness))
        elif name in _PREDICATE_OF:
            sol = max_subset(SubsetInstance(space, _PREDICATE_OF[name]))
            out = (sol.size, list(sol.witness))
        elif name == "l":
            members = self.cover.members
            sol = min_cover(CoverInstance(space.carrier, members, MIN_COVER))
            out = (sol.size, [list(points_of(members[i])) for i in sol.witness])
        elif name in ("w", "nw"):
            out = (len(set(space.min_open)) if space.n else 0, None)
        elif name == "chi":
            out = (1 if space.n else 0, None)
        elif name == "ld":
            value = 0
            for x in range(space.n):
                value = max(value, self._sub_d(space.min_open[x]))
            out = (value, None)
        else:  # hl, hd, hs
            out = (self._hereditary(name, allow_sampled), None)
        self._memo[key] = out
        return out

    def _sub_d(self, sub: int) -> int:
        """Density of the subspace on the mask ``sub``."""
        sets = tuple(self.space.min_open[y] & sub for y in iter_bits(sub))
        return min_cover(CoverInstance(sub, sets, MIN_HITTING)).size if sub else 0

    def _sub_l(self, sub: int) -> int:
        sets = tuple(sorted({self.space.min_open[y] & sub for y in iter_bits(sub)}))
        return min_cover(CoverInstance(sub, sets, MIN_COVER)).size if sub else 0

    def _sub_s(self, sub: int) -> int:
        return max_subset(SubsetInstance(self.space, "DISCRETE_SUBSPACE", sub)).size

    def _hereditary(self, name: str, allow_sampled: bool) -> int:
        per_subspace = {"hl": self._sub_l, "hd": self._sub_d, "hs": self._sub_s}[name]
        n = self.space.n
        if n <= HEREDITARY_EXHAUSTIVE_MAX:
            return max(per_subspace(sub) for sub in subsets_of(full_mask(n)))
        if not allow_sampled:
            raise BudgetExceeded(
                f"{name} enumerates 2^{n} subspaces; pass allow_sampled=True "
                f"beyond n = {HEREDITARY_EXHAUSTIVE_MAX} for a sampled lower bound"
            )
        rng = random.Random(f"hereditary:{name}:{n}")
        best = per_subspace(full_mask(n))
        for _ in range(HEREDITARY_SAMPLES):
            best = max(best, per_subspace(rng.getrandbits(n)))
        return best

    def sampled_hereditary_names(self) -> list[str]:
        """Hereditary invariants whose reported value is only a lower bound."""
        if self.space.n <= HEREDITARY_EXHAUSTIVE_MAX:
            return []
        return ["hl", "hd", "hs"]

    # -- entourage-filter invariants ------------------------------------------------

    def verbal_solution(self, kind: str, word: Word) -> tuple[int, list[int]]:
        if kind not in VERBAL_KINDS:
            raise ValueError(f"unknown verbal kind {kind!r}")
        key = ("verbal", kind, word.letters)
        if key in self._memo:
            return self._memo[key]
        dense = kind in ("ell_bar", "L_bar")
        sol = self._ball_cover(self.verbal_entourage(word), dense=dense)
        value = sol.size + (1 if kind in ("L", "L_bar") else 0)
        out = (value, list(sol.witness))
        self._memo[key] = out
        return out

    def verbal(self, kind: str, word: Word) -> int:
        return self.verbal_solution(kind, word)[0]

    def q_verbal(self, kind: str, word: Word) -> int:
        """Quasi-uniformity variant; on finite carriers it coincides with the
        plain variant because the minimal entourage is idempotent.  The
        identity is asserted, not assumed."""
        v = self.minimal_entourage
        if v.compose(v) != v:
            raise AssertionError("minimal entourage is not idempotent")
        return self.verbal(kind, word)

    def lattice_entourage(self, kind: str, n: int) -> Entourage:
        if n < 1:
            raise ValueError("lattice index must be >= 1")
        plus = self.verbal_entourage(Word.alternating(PLUS_FIRST, n))
        minus = self.verbal_entourage(Word.alternating(MINUS_FIRST, n))
        return plus.union(minus) if kind == "wedge" else plus.intersect(minus)

    def verbal_lattice_solution(self, kind: str, n: int) -> tuple[int, list[int]]:
        if kind not in ("wedge", "vee"):
            raise ValueError(f"unknown lattice kind {kind!r}")
        key = ("lattice", kind, n)
        if key in self._memo:
            return self._memo[key]
        sol = self._ball_cover(self.lattice_entourage(kind, n))
        out = (sol.size, list(sol.witness))
        self._memo[key] = out
        return out

    def verbal_lattice(self, kind: str, n: int) -> int:
        return self.verbal_lattice_solution(kind, n)[0]

    def q_verbal_lattice(self, kind: str, n: int) -> int:
        v = self.minimal_entourage
        if v.compose(v) != v:
            raise AssertionError("minimal entourage is not idempotent")
        return self.verbal_lattice(kind, n)

    def universal_uniformity_invariants(self) -> tuple[int, int, Entourage]:
        """(u_ell, u_L, E): E is the least equivalence containing the minimal
        entourage; the universal uniformity is its principal filter, so its
        boundedness number is the number of E-classes."""
        def build():
            e, _ = self.minimal_entourage.stabilized_equivalence()
            u_ell = e.equivalence_class_count()
            return u_ell, u_ell + 1, e

        return self._cached("universal", build)

    def ell_omega(self) -> tuple[int, Word]:
        """Minimum of the plain boundedness values over all words, with the
        alternating word whose power reaches the stable equivalence."""
        def build():
            _, k = self.minimal_entourage.stabilized_equivalence()
            word = Word.alternating(MINUS_FIRST, 2 * k)
            u_ell, _, _ = self.universal_uniformity_invariants()
            return u_ell, word

        return self._cached("ell_omega", build)

    # -- star invariants -------------------------------------------------------

    def star_solution(self, kind: str, index) -> tuple[int, list]:
        if kind not in STAR_KINDS:
            raise ValueError(f"unknown star kind {kind!r}")
        dense = kind in ("lbar", "Lbar")
        sharp = kind in ("L", "Lbar")
        if index == "omega":
            best = None
            for k in range(self.space.n + 2):
                value, witness = self.star_solution("lbar" if dense else "l", k)
                if best is None or value < best[0]:
                    best = (value, witness)
            assert best is not None
            return (best[0] + (1 if sharp else 0), best[1])
        doubled = _normalize_index(index)
        key = ("star", dense, doubled)
        if key in self._memo:
            value, witness = self._memo[key]
            return value + (1 if sharp else 0), witness
        k, half = divmod(doubled, 2)
        cov = self.cover
        if half == 0:
            candidates = tuple(cov.star(1 << x, k) for x in range(self.space.n))
        else:
            candidates = tuple(cov.star(m, k) for m in cov.members)
        if dense:
            candidates = tuple(self.space.closure(c) for c in candidates)
        sol = min_cover(CoverInstance(self.space.carrier, candidates, MIN_COVER))
        if half == 0:
            witness = list(sol.witness)
        else:
            witness = [list(points_of(cov.members[i])) for i in sol.witness]
        self._memo[key] = (sol.size, witness)
        return sol.size + (1 if sharp else 0), witness

    def star_invariant(self, kind: str, index) -> int:
        return self.star_solution(kind, index)[0]


# -- brute-force oracles ----------------------------------------------------------


def all_neighborhood_assignments(space: FiniteSpace, budget: int = 1 << 20) -> Iterator[Entourage]:
    """Every entourage whose ball at x contains the minimal open of x."""
    free = [space.carrier & ~u for u in space.min_open]
    total = 1
    for f in free:
        total <<= f.bit_count()
        if total > budget:
            raise BudgetExceeded(f"more than {budget} neighborhood assignments")
    rows = list(space.min_open)

    def extend(x: int) -> Iterator[Entourage]:
        if x == space.n:
            yield Entourage(space.n, tuple(rows))
            return
        base = space.min_open[x]
        for extra in subsets_of(free[x]):
            rows[x] = base | extra
            yield from extend(x + 1)
        rows[x] = base

    return extend(0)


def oracle_verbal(space: FiniteSpace, kind: str, word: Word, max_n: int = 4) -> int:
    """Definitional value: worst case over all neighborhood assignments of the
    least ball-cover of the assignment's own directed power."""
    if space.n > max_n:
        raise BudgetExceeded(f"oracle_verbal requires n <= {max_n}")
    if kind not in VERBAL_KINDS:
        raise ValueError(f"unknown verbal kind {kind!r}")
    dense = kind in ("ell_bar", "L_bar")
    worst = 0
    for u in all_neighborhood_assignments(space):
        rows = u.verbal_power(word).rows
        if dense:
            rows = tuple(space.closure(r) for r in rows)
        worst = max(worst, min_cover(CoverInstance(space.carrier, rows, MIN_COVER)).size)
    return worst + (1 if kind in ("L", "L_bar") else 0)


def _star_value_on_cover(space: FiniteSpace, cov: OpenCover, dense: bool, doubled: int) -> int:
    k, half = divmod(doubled, 2)
    if half == 0:
        candidates = tuple(cov.star(1 << x, k) for x in range(space.n))
    else:
        candidates = tuple(cov.star(m, k) for m in cov.members)
    if dense:
        candidates = tuple(space.closure(c) for c in candidates)
    return min_cover(CoverInstance(space.carrier, candidates, MIN_COVER)).size


def oracle_star(
    space: FiniteSpace,
    kind: str,
    index,
    all_covers: bool = False,
    max_n: int = 4,
) -> int:
    """Definitional value: worst case over enumerated covers (antichain covers
    by default; every cover of distinct opens with ``all_covers=True``)."""
    if space.n > max_n:
        raise BudgetExceeded(f"oracle_star requires n <= {max_n}")
    if kind not in STAR_KINDS:
        raise ValueError(f"unknown star kind {kind!r}")
    dense = kind in ("lbar", "Lbar")
    sharp = kind in ("L", "Lbar")
    covers = list(enumerate_covers(space, antichain_only=not all_covers, max_n=max_n))
    if index == "omega":
        value = min(
            max(_star_value_on_cover(space, cov, dense, 2 * k) for cov in covers)
            for k in range(space.n + 2)
        )
        return value + (1 if sharp else 0)
    doubled = _normalize_index(index)
    value = max(_star_value_on_cover(space, cov, dense, doubled) for cov in covers)
    return value + (1 if sharp else 0)


# -- reports -----------------------------------------------------------------------


REPORT_WORDS = tuple(
    Word.alternating(sign, n) for n in range(4) for sign in (PLUS_FIRST, MINUS_FIRST)
)[1:]  # drop one duplicate empty word, keep e, +, -, +-, -+, +-+, -+-

REPORT_STAR_INDICES = (0, 0.5, 1, 1.5, 2)


@dataclass(frozen=True)
class InvariantReport:
    space_id: str
    space: FiniteSpace
    values: dict
    witnesses: dict
    notes: dict

    def to_json(self) -> dict:
        return {
            "space_id": self.space_id,
            "space": self.space.to_json(),
            "values": self.values,
            "witnesses": self.witnesses,
            "notes": self.notes,
        }


def full_report(space: FiniteSpace, space_id: str = "space") -> InvariantReport:
    """Every catalogued invariant of one space, with witnesses."""
    inv = SpaceInvariants(space)
    values: dict = {}
    witnesses: dict = {}
    notes: dict = {}

    for name in CLASSICAL_NAMES:
        value, witness = inv.classical_solution(name, allow_sampled=True)
        values[name] = value
        if witness is not None:
            witnesses[name] = witness
    sampled = inv.sampled_hereditary_names()
    if sampled:
        notes["sampled_lower_bounds"] = sampled

    for word in REPORT_WORDS:
        text = str(word)
        value, centers = inv.verbal_solution("ell", word)
        values[f"ell[{text}]"] = value
        witnesses[f"ell[{text}]"] = centers
        bar_value, bar_centers = inv.verbal_solution("ell_bar", word)
        values[f"ellbar[{text}]"] = bar_value
        witnesses[f"ellbar[{text}]"] = bar_centers
        values[f"L[{text}]"] = inv.verbal("L", word)
        values[f"Lbar[{text}]"] = inv.verbal("L_bar", word)

    for n in (1, 2):
        for kind in ("wedge", "vee"):
            value, centers = inv.verbal_lattice_solution(kind, n)
            values[f"{kind}[{n}]"] = value
            witnesses[f"{kind}[{n}]"] = centers

    u_ell, u_l, e = inv.universal_uniformity_invariants()
    values["u_ell"] = u_ell
    values["u_L"] = u_l
    witnesses["u_ell"] = _class_representatives(e)

    omega_value, omega_word = inv.ell_omega()
    values["ell_omega"] = omega_value
    witnesses["ell_omega"] = {"word": str(omega_word)}

    for index in REPORT_STAR_INDICES:
        tag = format_star_index(index)
        for kind, prefix in (("l", "lstar"), ("lbar", "blstar")):
            value, witness = inv.star_solution(kind, index)
            values[f"{prefix}[{tag}]"] = value
            witnesses[f"{prefix}[{tag}]"] = witness

    return InvariantReport(space_id, space, values, witnesses, notes)


def _class_representatives(equivalence: Entourage) -> list[int]:
    reps = []
    seen = 0
    for x in range(equivalence.n):
        if not seen >> x & 1:
            reps.append(x)
            seen |= equivalence.rows[x]
    return reps
