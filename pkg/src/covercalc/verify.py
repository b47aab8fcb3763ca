"""Theorem harness: every registered claim is data (id, hypothesis, check),
so claims can be listed, selected, swept over space families, and reported
with pass / vacuous / fail counts and minimal counterexamples.

Claim ids are stable strings keyed to the project's theorem catalog (see the
README table).  Claims whose hypotheses have no faithful finite form are
registered as stubs that always report VACUOUS, with a note saying why; one
claim is registered as an *expected divergence* (its statement provably
fails on finite partition topologies) and never fails a sweep.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Callable, Iterable, Iterator, Sequence

from .bitset import iter_bits, points_of
from .entourage import Entourage
from .invariants import SpaceInvariants, oracle_star, oracle_verbal
from .space import FiniteSpace, enumerate_all_spaces, random_space, zigzag
from .words import MINUS_FIRST, PLUS_FIRST, Word, all_words

PASS = "PASS"
VACUOUS = "VACUOUS"
FAIL = "FAIL"


class UnknownClaim(ValueError):
    pass


@dataclass(frozen=True)
class Claim:
    claim_id: str
    description: str
    evaluate: Callable[[SpaceInvariants], tuple[bool, dict]]
    hypothesis: Callable[[FiniteSpace], bool] | None = None
    expected_divergence: bool = False
    note: str = ""


@dataclass(frozen=True)
class TheoremReport:
    claim_id: str
    space_id: str
    status: str
    payload: dict
    space: dict | None = None  # full space JSON, included on FAIL

    def to_json(self) -> dict:
        data = {
            "claim_id": self.claim_id,
            "space_id": self.space_id,
            "status": self.status,
            "payload": self.payload,
        }
        if self.space is not None:
            data["space"] = self.space
        return data


# -- claim helpers ---------------------------------------------------------------


def _chain(values: Sequence[tuple[str, int]]) -> tuple[bool, dict]:
    """Check consecutive <= along a named chain of values."""
    payload = {name: value for name, value in values}
    for (na, va), (nb, vb) in zip(values, values[1:]):
        if va > vb:
            payload["violated"] = f"{na} <= {nb}"
            return False, payload
    return True, payload


def _all_leq(pairs: Iterable[tuple[str, int, str, int]]) -> tuple[bool, dict]:
    payload: dict = {}
    ok = True
    for na, va, nb, vb in pairs:
        payload[na] = va
        payload[nb] = vb
        if va > vb and ok:
            payload["violated"] = f"{na} <= {nb}"
            ok = False
    return ok, payload


def _all_equal(values: Sequence[tuple[str, int]]) -> tuple[bool, dict]:
    payload = {name: value for name, value in values}
    distinct = {value for _, value in values}
    if len(distinct) > 1:
        payload["violated"] = " = ".join(name for name, _ in values)
        return False, payload
    return True, payload


def _law_entourages(space: FiniteSpace) -> list[Entourage]:
    v = space.minimal_entourage()
    ents = [v, v.inverse(), v.union(v.inverse())]
    if space.n:
        ents.append(space.pervin_entourage(space.min_open[0]))
    return ents


_WORDS3 = all_words(3)
_SUBWORD_PAIRS = [
    (v, w) for v in _WORDS3 for w in _WORDS3 if v != w and v.is_subword_of(w)
]


def _union_find_closure(ent: Entourage) -> Entourage:
    """Equivalence closure via union-find; independent of relation powers."""
    parent = list(range(ent.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(ent.n):
        for y in iter_bits(ent.rows[x]):
            ra, rb = find(x), find(y)
            if ra != rb:
                parent[rb] = ra
    groups: dict[int, int] = {}
    for x in range(ent.n):
        groups.setdefault(find(x), 0)
        groups[find(x)] |= 1 << x
    rows = [groups[find(x)] for x in range(ent.n)]
    return Entourage(ent.n, tuple(rows))


def _has_unique_open_hub(space: FiniteSpace) -> bool:
    """Exactly one point is non-isolated and its minimal open is everything."""
    hubs = [x for x in range(space.n) if space.min_open[x] != 1 << x]
    return len(hubs) == 1 and space.min_open[hubs[0]] == space.carrier


# -- claim checks -----------------------------------------------------------------


def _check_lemma_2_1_1(inv: SpaceInvariants) -> tuple[bool, dict]:
    words = all_words(2)
    for u in _law_entourages(inv.space):
        for v in words:
            for w in words:
                lhs = u.verbal_power(v.concat(w))
                rhs = u.verbal_power(v).compose(u.verbal_power(w))
                if lhs != rhs:
                    return False, {"entourage": u.to_json(), "v": str(v), "w": str(w)}
    return True, {"entourages": len(_law_entourages(inv.space)), "word_pairs": len(words) ** 2}


def _check_lemma_2_1_2(inv: SpaceInvariants) -> tuple[bool, dict]:
    for u in _law_entourages(inv.space):
        for v, w in _SUBWORD_PAIRS:
            if not u.verbal_power(v).subset(u.verbal_power(w)):
                return False, {"entourage": u.to_json(), "v": str(v), "w": str(w)}
    return True, {"subword_pairs": len(_SUBWORD_PAIRS)}


def _check_lemma_2_2(inv: SpaceInvariants) -> tuple[bool, dict]:
    space = inv.space
    cov = inv.cover
    v = inv.minimal_entourage
    step = v.inverse().compose(v)
    for k in range(4):
        by_word = inv.verbal_entourage(Word.alternating(MINUS_FIRST, 2 * k))
        by_step = step.power(k)
        for x in range(space.n):
            star = cov.star(1 << x, k)
            if not (star == by_word.ball(1 << x) == by_step.ball(1 << x)):
                return False, {
                    "x": x,
                    "k": k,
                    "star": list(points_of(star)),
                    "ball": list(points_of(by_word.ball(1 << x))),
                }
    return True, {"depths": 4}


def _check_prop_1_1(inv: SpaceInvariants) -> tuple[bool, dict]:
    dc = inv.classical("dc")
    ld = inv.classical("ld")
    ok, payload = _all_leq(
        [
            ("lstar[1]", inv.star_invariant("l", 1), "de", inv.classical("de")),
            ("blstar[1.5]", inv.star_invariant("lbar", 1.5), "dc", dc),
            ("blstar[1]", inv.star_invariant("lbar", 1), "dc*ld", dc * ld),
        ]
    )
    payload["ld"] = ld
    return ok, payload


def _check_prop_1_5(inv: SpaceInvariants) -> tuple[bool, dict]:
    payload: dict = {}
    for doubled in range(6):  # star indices 0, 1/2, ..., 5/2
        index = doubled / 2
        n, half = divmod(doubled, 2)
        word = (
            Word.alternating(MINUS_FIRST, 2 * n)
            if half == 0
            else Word.alternating(PLUS_FIRST, 2 * n + 1)
        )
        for star_kind, verbal_kind, prefix in (
            ("l", "ell", "lstar"),
            ("lbar", "ell_bar", "blstar"),
        ):
            via_cover = inv.star_invariant(star_kind, index)
            via_entourage = inv.verbal(verbal_kind, word)
            payload[f"{prefix}[{index}]"] = via_cover
            if via_cover != via_entourage:
                payload["violated"] = f"{prefix}[{index}] = {verbal_kind}[{word}]"
                payload["via_entourage"] = via_entourage
                return False, payload
    return True, payload


def _check_prop_1_6(inv: SpaceInvariants) -> tuple[bool, dict]:
    space = inv.space
    l_here = inv.verbal("ell", Word("+"))
    vee_here = inv.verbal_lattice("vee", 1)
    for closed in space.closed_sets():
        if closed in (0, space.carrier):
            continue
        sub = SpaceInvariants(space.subspace(closed))
        if sub.verbal("ell", Word("+")) > l_here or sub.verbal_lattice("vee", 1) > vee_here:
            return False, {"closed_subspace": list(points_of(closed))}
    return True, {"ell[+]": l_here, "vee[1]": vee_here}


def _check_prop_1_7(inv: SpaceInvariants) -> tuple[bool, dict]:
    space = inv.space
    d_here = inv.verbal("ell", Word("-"))
    vee_here = inv.verbal_lattice("vee", 1)
    for open_mask in space.opens():
        if open_mask in (0, space.carrier):
            continue
        sub = SpaceInvariants(space.subspace(open_mask))
        if sub.verbal("ell", Word("-")) > d_here or sub.verbal_lattice("vee", 1) > vee_here:
            return False, {"open_subspace": list(points_of(open_mask))}
    return True, {"ell[-]": d_here, "vee[1]": vee_here}


def _check_prop_1_8_chain_1(inv: SpaceInvariants) -> tuple[bool, dict]:
    return _chain(
        [
            ("wedge[1]", inv.verbal_lattice("wedge", 1)),
            ("s", inv.classical("s")),
            ("q_vee[1]", inv.q_verbal_lattice("vee", 1)),
            ("vee[1]", inv.verbal_lattice("vee", 1)),
            ("nw", inv.classical("nw")),
        ]
    )


def _check_prop_1_8_chain_2(inv: SpaceInvariants) -> tuple[bool, dict]:
    ok, payload = _chain(
        [
            ("de", inv.classical("de")),
            ("q_ell[+]", inv.q_verbal("ell", Word("+"))),
            ("ell[+]", inv.verbal("ell", Word("+"))),
        ]
    )
    payload["l"] = inv.classical("l")
    if ok and payload["ell[+]"] != payload["l"]:
        payload["violated"] = "ell[+] = l"
        ok = False
    return ok, payload


def _check_prop_1_8_chain_3(inv: SpaceInvariants) -> tuple[bool, dict]:
    return _chain(
        [
            ("c", inv.classical("c")),
            ("q_ell[-]", inv.q_verbal("ell", Word("-"))),
            ("ell[-]", inv.verbal("ell", Word("-"))),
            ("d", inv.classical("d")),
        ]
    )


def _check_thm_4_1(inv: SpaceInvariants) -> tuple[bool, dict]:
    fore = inv.verbal("ell", Word("-"))
    d = inv.classical("d")
    chi = inv.classical("chi")
    payload = {"ell[-]": fore, "d": d, "chi": chi}
    if fore != d:
        payload["violated"] = "ell[-] = d"
        return False, payload
    if d > fore * max(chi, 1):
        payload["violated"] = "d <= ell[-] * chi"
        return False, payload
    return True, payload


def _check_word_monotonicity(inv: SpaceInvariants) -> tuple[bool, dict]:
    for v, w in _SUBWORD_PAIRS:
        for kind in ("ell", "ell_bar"):
            if inv.verbal(kind, w) > inv.verbal(kind, v):
                return False, {
                    "kind": kind,
                    "v": str(v),
                    "w": str(w),
                    "value_v": inv.verbal(kind, v),
                    "value_w": inv.verbal(kind, w),
                }
    return True, {"subword_pairs": len(_SUBWORD_PAIRS)}


def _lattice_check(n: int):
    def check(inv: SpaceInvariants) -> tuple[bool, dict]:
        plus = inv.verbal(
            "ell", Word.alternating(PLUS_FIRST, n))
        minus = inv.verbal(
            "ell", Word.alternating(MINUS_FIRST, n))
        wedge = inv.verbal_lattice("wedge", n)
        vee = inv.verbal_lattice("vee", n)
        vee_up = inv.verbal_lattice("vee", n + 1)
        payload = {
            f"vee[{n + 1}]": vee_up,
            f"wedge[{n}]": wedge,
            f"ell[+-({n})]": plus,
            f"ell[-+({n})]": minus,
            f"vee[{n}]": vee,
        }
        ok = vee_up <= wedge <= min(plus, minus) and max(plus, minus) <= vee
        if n >= 2:
            wedge_down = inv.verbal_lattice("wedge", n - 1)
            payload[f"wedge[{n - 1}]"] = wedge_down
            ok = ok and vee <= wedge_down
        if not ok:
            payload["violated"] = "lattice chain"
        return ok, payload

    return check


def _check_star_chains(inv: SpaceInvariants) -> tuple[bool, dict]:
    indices = [0, 0.5, 1, 1.5, 2, 2.5]
    lstar = {i: inv.star_invariant("l", i) for i in indices}
    blstar = {i: inv.star_invariant("lbar", i) for i in indices}
    payload = {"lstar": {str(i): v for i, v in lstar.items()},
               "blstar": {str(i): v for i, v in blstar.items()}}
    for a, b in zip(indices, indices[1:]):
        if lstar[b] > lstar[a] or blstar[b] > blstar[a]:
            payload["violated"] = f"index {b} <= index {a}"
            return False, payload
    for i in indices:
        if blstar[i] > lstar[i]:
            payload["violated"] = f"blstar[{i}] <= lstar[{i}]"
            return False, payload
    for k in (0.5, 1, 1.5):
        if lstar[k + 1] > blstar[k]:
            payload["violated"] = f"lstar[{k + 1}] <= blstar[{k}]"
            return False, payload
    checks = [
        (lstar[0] == inv.space.n, "lstar[0] = |X|"),
        (blstar[0] == inv.classical("d"), "blstar[0] = d"),
        (lstar[0.5] == inv.classical("l"), "lstar[0.5] = l"),
        (blstar[0.5] <= inv.classical("c"), "blstar[0.5] <= c"),
        (lstar[1] <= inv.classical("d"), "lstar[1] <= d"),
    ]
    for ok, label in checks:
        if not ok:
            payload["violated"] = label
            return False, payload
    return True, payload


def _check_q_eq_p(inv: SpaceInvariants) -> tuple[bool, dict]:
    v = inv.minimal_entourage
    if v.compose(v) != v:
        return False, {"violated": "minimal entourage idempotent"}
    for word in all_words(3):
        for kind in ("ell", "ell_bar"):
            if inv.q_verbal(kind, word) != inv.verbal(kind, word):
                return False, {"violated": f"q{kind}[{word}] = {kind}[{word}]"}
    return True, {"words": len(all_words(3))}


def _check_pervin_minimum(inv: SpaceInvariants) -> tuple[bool, dict]:
    minimum = inv.space.pervin_minimum()
    ok = minimum == inv.minimal_entourage
    return ok, {} if ok else {"pervin_minimum": minimum.to_json()}


def _check_universal_principal(inv: SpaceInvariants) -> tuple[bool, dict]:
    u_ell, u_l, e = inv.universal_uniformity_invariants()
    v = inv.minimal_entourage
    payload = {"u_ell": u_ell, "u_L": u_l}
    if not e.is_equivalence() or not v.subset(e):
        payload["violated"] = "E is an equivalence containing the minimal entourage"
        return False, payload
    if e != _union_find_closure(v):
        payload["violated"] = "E = union-find equivalence closure"
        return False, payload
    if u_ell != inv._ball_cover(e).size or u_l != u_ell + 1:
        payload["violated"] = "u_ell = least E-ball cover"
        return False, payload
    return True, payload


def _check_ell_omega(inv: SpaceInvariants) -> tuple[bool, dict]:
    value, word = inv.ell_omega()
    u_ell, _, e = inv.universal_uniformity_invariants()
    payload = {"ell_omega": value, "word": str(word), "u_ell": u_ell}
    if value != u_ell:
        payload["violated"] = "ell_omega = u_ell"
        return False, payload
    if inv.verbal_entourage(word) != e:
        payload["violated"] = "power at the witness word reaches the stable equivalence"
        return False, payload
    length = max(len(word) + 2, 2)
    sweep_min = min(
        inv.verbal("ell", Word.alternating(sign, m))
        for m in range(length + 1)
        for sign in (PLUS_FIRST, MINUS_FIRST)
    )
    if sweep_min != value:
        payload["violated"] = "minimum over alternating words"
        payload["sweep_min"] = sweep_min
        return False, payload
    return True, payload


def _check_example_3n(inv: SpaceInvariants) -> tuple[bool, dict]:
    space = inv.space
    v = inv.minimal_entourage
    hub = next(x for x in range(space.n) if space.min_open[x] != 1 << x)
    vee1 = inv.lattice_entourage("vee", 1)
    wedge1 = inv.lattice_entourage("wedge", 1)
    mp2 = inv.verbal_entourage(Word("-+"))
    pm2 = inv.verbal_entourage(Word("+-"))
    expected_wedge = Entourage.from_pairs(
        space.n,
        [(hub, y) for y in range(space.n)] + [(y, hub) for y in range(space.n)],
    )
    u_ell, _, _ = inv.universal_uniformity_invariants()
    payload = {"hub": hub, "u_ell": u_ell}
    checks = [
        (vee1 == Entourage.diagonal(space.n), "vee-1 entourage = diagonal"),
        (wedge1 == expected_wedge, "wedge-1 entourage = diagonal + hub row and column"),
        (mp2 == Entourage.all_pairs(space.n), "-+ power = all pairs"),
        (pm2 == wedge1, "+- power = wedge-1 entourage"),
        (u_ell == 1, "u_ell = 1"),
        (mp2 != pm2, "-+ and +- powers differ"),
        (v != v.inverse(), "assignment filter is not self-inverse"),
        (v != wedge1 and v != vee1, "assignment filter differs from lattice powers"),
    ]
    for ok, label in checks:
        if not ok:
            payload["violated"] = label
            return False, payload
    return True, payload


def _check_u_eq_q_iff_discrete(inv: SpaceInvariants) -> tuple[bool, dict]:
    _, _, e = inv.universal_uniformity_invariants()
    same = e == inv.minimal_entourage
    discrete = inv.space.is_discrete()
    payload = {"uniformity_equals_assignments": same, "discrete": discrete}
    if same != discrete:
        payload["violated"] = "equality holds exactly on discrete spaces"
        return False, payload
    return True, payload


def _check_u_eq_q_iff_symmetric(inv: SpaceInvariants) -> tuple[bool, dict]:
    _, _, e = inv.universal_uniformity_invariants()
    v = inv.minimal_entourage
    same = e == v
    symmetric = v.is_symmetric()
    payload = {"uniformity_equals_assignments": same, "symmetric": symmetric}
    if same != symmetric:
        payload["violated"] = "equality holds exactly on partition topologies"
        return False, payload
    return True, payload


def _check_zigzag_strict(inv: SpaceInvariants) -> tuple[bool, dict]:
    v = inv.minimal_entourage
    step = inv.verbal_entourage(Word("-+"))
    _, _, e = inv.universal_uniformity_invariants()
    payload = {
        "minus_plus_power": step.to_json(),
        "stable_equivalence": e.to_json(),
    }
    if step == e or not step.subset(e):
        payload["violated"] = "-+ power strictly below the stable equivalence"
        return False, payload
    payload["note"] = (
        "the uniformity filter is strictly finer than the -+ power filter here; "
        "recorded as an observation about Hausdorff-free refinement hypotheses"
    )
    return True, payload


def _check_oracle_verbal(inv: SpaceInvariants) -> tuple[bool, dict]:
    for word in all_words(3):
        for kind in ("ell", "ell_bar"):
            reduced = inv.verbal(kind, word)
            brute = oracle_verbal(inv.space, kind, word)
            if reduced != brute:
                return False, {
                    "kind": kind,
                    "word": str(word),
                    "reduced": reduced,
                    "oracle": brute,
                }
    return True, {"words": len(all_words(3))}


def _check_oracle_star(inv: SpaceInvariants) -> tuple[bool, dict]:
    for index in (0, 0.5, 1, 1.5, 2):
        for kind in ("l", "lbar"):
            reduced = inv.star_invariant(kind, index)
            antichain = oracle_star(inv.space, kind, index, all_covers=False)
            everything = oracle_star(inv.space, kind, index, all_covers=True)
            if not (reduced == antichain == everything):
                return False, {
                    "kind": kind,
                    "index": index,
                    "reduced": reduced,
                    "oracle_antichain": antichain,
                    "oracle_all_covers": everything,
                }
    return True, {"indices": 5}


def _check_prop_1_2_7(inv: SpaceInvariants) -> tuple[bool, dict]:
    payload = {
        "lstar[1]": inv.star_invariant("l", 1),
        "d": inv.classical("d"),
        "e": inv.classical("e"),
        "de": inv.classical("de"),
        "hd": inv.classical("hd"),
    }
    if payload["lstar[1]"] != payload["d"]:
        payload["violated"] = "lstar[1] = d"
        return False, payload
    if not payload["e"] == payload["de"] == payload["hd"]:
        payload["violated"] = "e = de = hd"
        return False, payload
    return True, payload


def _stub(_: SpaceInvariants) -> tuple[bool, dict]:
    raise AssertionError("stub claims are always vacuous")


# -- registry ---------------------------------------------------------------------


def _classical_pair_check(low: str, high: str):
    def check(inv: SpaceInvariants) -> tuple[bool, dict]:
        return _all_leq([(low, inv.classical(low), high, inv.classical(high))])

    return check


_HODEL_ARROWS = [
    ("c", "d"), ("c", "s"), ("e", "s"), ("e", "l"), ("d", "hd"), ("s", "hd"),
    ("s", "hl"), ("l", "hl"), ("hd", "nw"), ("hl", "nw"), ("nw", "w"), ("d", "nw"),
]
_EXTENDED_ARROWS = [
    ("dc", "de"), ("dc", "c"), ("e", "de"), ("de", "l"), ("de", "s"),
]


def _quasi_regular(space: FiniteSpace) -> bool:
    return space.is_quasi_regular()


def _build_claims() -> list[Claim]:
    claims: list[Claim] = [
        Claim(
            "lemma-2.1-1",
            "directed powers are multiplicative: the power at a concatenation "
            "equals the composition of the powers",
            _check_lemma_2_1_1,
        ),
        Claim(
            "lemma-2.1-2",
            "directed powers are monotone in the subword (subsequence) order",
            _check_lemma_2_1_2,
        ),
        Claim(
            "lemma-2.2",
            "k-fold stars under the minimal cover equal balls of the k-th "
            "inverse-then-forward power of the minimal entourage",
            _check_lemma_2_2,
        ),
        Claim(
            "prop-1.1",
            "weak extent is at most the discrete extent; dense star numbers are "
            "bounded by discrete cellularity (times local density)",
            _check_prop_1_1,
        ),
        Claim(
            "prop-1.2-1",
            "on quasi-regular spaces the discrete cellularity equals the dense "
            "1.5-star number and the limit star number",
            lambda inv: _all_equal(
                [
                    ("dc", inv.classical("dc")),
                    ("blstar[1.5]", inv.star_invariant("lbar", 1.5)),
                    ("lstar[omega]", inv.star_invariant("l", "omega")),
                ]
            ),
            hypothesis=_quasi_regular,
        ),
        Claim(
            "prop-1.2-2",
            "on quasi-regular normal-or-locally-separable spaces the discrete "
            "cellularity equals the dense 1-star number",
            lambda inv: _all_equal(
                [
                    ("dc", inv.classical("dc")),
                    ("blstar[1]", inv.star_invariant("lbar", 1)),
                ]
            ),
            hypothesis=lambda s: _quasi_regular(s) and (s.is_normal() or True),
            note="every finite space is locally separable, so the disjunct is trivial here",
        ),
        Claim(
            "prop-1.2-3",
            "on quasi-regular perfectly-normal spaces cellularity, discrete "
            "cellularity and the dense half-star number coincide",
            lambda inv: _all_equal(
                [
                    ("dc", inv.classical("dc")),
                    ("c", inv.classical("c")),
                    ("blstar[0.5]", inv.star_invariant("lbar", 0.5)),
                ]
            ),
            hypothesis=lambda s: _quasi_regular(s) and s.is_partition_topology(),
            note="finite proxy: perfectly normal = every closed set open = partition topology",
        ),
        Claim(
            "prop-1.2-4",
            "on quasi-regular collectively-Hausdorff spaces discrete cellularity, "
            "discrete extent and the dense 1-star number coincide",
            lambda inv: _all_equal(
                [
                    ("dc", inv.classical("dc")),
                    ("de", inv.classical("de")),
                    ("blstar[1]", inv.star_invariant("lbar", 1)),
                ]
            ),
            hypothesis=lambda s: _quasi_regular(s) and s.is_collectively_hausdorff(),
            note="collective Hausdorffness reduces to pairs of points at finite scale",
        ),
        Claim(
            "prop-1.2-5",
            "on paracompact spaces discrete cellularity equals the subcover number",
            lambda inv: _all_equal(
                [("dc", inv.classical("dc")), ("l", inv.classical("l"))]
            ),
            hypothesis=lambda s: s.is_discrete(),
            note="finite proxy for paracompact + Hausdorff is discreteness",
        ),
        Claim(
            "prop-1.2-6",
            "on perfectly paracompact spaces discrete cellularity equals the "
            "hereditary subcover number",
            lambda inv: _all_equal(
                [("dc", inv.classical("dc")), ("hl", inv.classical("hl"))]
            ),
            hypothesis=lambda s: s.is_discrete(),
            note="finite proxy for perfectly paracompact is discreteness",
        ),
        Claim(
            "prop-1.2-7",
            "on Moore spaces the weak extent equals density and extent, discrete "
            "extent and hereditary density coincide",
            _check_prop_1_2_7,
            hypothesis=lambda s: s.is_discrete(),
            note="finite proxy for regular developable T1 is discreteness",
        ),
        Claim(
            "prop-1.5",
            "cover-path star invariants equal entourage-path alternating-power "
            "invariants at matching indices (dual computation routes)",
            _check_prop_1_5,
        ),
        Claim(
            "prop-1.6",
            "closed subspaces do not increase the forward or symmetric "
            "boundedness invariants",
            _check_prop_1_6,
            hypothesis=lambda s: s.n <= 6,
            note="budgeted: closed-subspace sweep is exhaustive, kept to n <= 6",
        ),
        Claim(
            "prop-1.7",
            "open subspaces do not increase the backward or symmetric "
            "boundedness invariants",
            _check_prop_1_7,
            hypothesis=lambda s: s.n <= 6,
            note="budgeted: open-subspace sweep is exhaustive, kept to n <= 6",
        ),
        Claim("prop-1.8-chain-1",
              "wedge-1 <= spread <= q-vee-1 <= vee-1 <= network weight",
              _check_prop_1_8_chain_1),
        Claim("prop-1.8-chain-2",
              "discrete extent <= q-forward <= forward = subcover number",
              _check_prop_1_8_chain_2),
        Claim("prop-1.8-chain-3",
              "cellularity <= q-backward <= backward <= density",
              _check_prop_1_8_chain_3),
        Claim(
            "thm-4.1-finite",
            "the backward boundedness number (foredensity) equals density on "
            "every finite space, and density <= foredensity * character",
            _check_thm_4_1,
        ),
        Claim(
            "sec2.4-word-monotonicity",
            "longer words give finer filters: subword implies the reverse "
            "inequality of boundedness values",
            _check_word_monotonicity,
        ),
        Claim(
            "diagram-star-chains",
            "star invariants fall as the index grows, dense variants sit below "
            "plain ones, and one extra star absorbs a dense stage",
            _check_star_chains,
        ),
        Claim("finite-q-eq-p",
              "the minimal entourage is idempotent, so q-variants equal plain "
              "variants on finite spaces",
              _check_q_eq_p),
        Claim(
            "finite-pervin-minimum",
            "the intersection of all Pervin entourages is the minimal entourage",
            _check_pervin_minimum,
            hypothesis=lambda s: s.n <= 10,
            note="budgeted: enumerates the whole open family",
        ),
        Claim("finite-universal-principal",
              "the universal uniformity is the principal filter of the "
              "equivalence closure of the minimal entourage",
              _check_universal_principal),
        Claim("finite-ell-omega",
              "the minimum over all words is attained at the stable alternating "
              "power and equals the uniformity boundedness number",
              _check_ell_omega),
        Claim(
            "example-3n-identities",
            "on a space with a single open hub point: vee-1 collapses to the "
            "diagonal, wedge-1 is the hub cross, and the -+ power is everything",
            _check_example_3n,
            hypothesis=lambda s: s.n >= 3 and _has_unique_open_hub(s),
        ),
        Claim(
            "prop-3n-u-eq-q-iff-discrete",
            "uniformity filter = assignment filter exactly on discrete spaces",
            _check_u_eq_q_iff_discrete,
            expected_divergence=True,
            note="finitely false: any non-discrete partition topology is a "
            "counterexample; recorded as a documented divergence, not a bug",
        ),
        Claim(
            "prop-3n-u-eq-q-iff-symmetric",
            "uniformity filter = assignment filter exactly on partition "
            "topologies (symmetric minimal entourage)",
            _check_u_eq_q_iff_symmetric,
        ),
        Claim(
            "zigzag-strict-inclusion",
            "on the 3-point fence the -+ power sits strictly below the stable "
            "equivalence: the uniformity filter is strictly finer",
            _check_zigzag_strict,
            hypothesis=lambda s: s.min_open == zigzag(3).min_open,
        ),
        Claim(
            "oracle-parity-verbal",
            "reduced entourage invariants match the brute force over all "
            "neighborhood assignments",
            _check_oracle_verbal,
            hypothesis=lambda s: s.n <= 3,
            note="budgeted: oracle enumerates every neighborhood assignment",
        ),
        Claim(
            "oracle-parity-star",
            "reduced star invariants match the brute force over all covers, "
            "antichain-restricted or not",
            _check_oracle_star,
            hypothesis=lambda s: s.n <= 3,
            note="budgeted: oracle enumerates every cover of distinct opens",
        ),
    ]

    for low, high in _HODEL_ARROWS:
        claims.append(
            Claim(
                f"diagram-hodel-arrow-{low}-le-{high}",
                f"classical diagram arrow: {low} <= {high}",
                _classical_pair_check(low, high),
            )
        )
    for low, high in _EXTENDED_ARROWS:
        claims.append(
            Claim(
                f"diagram-ext-arrow-{low}-le-{high}",
                f"extended diagram arrow: {low} <= {high}",
                _classical_pair_check(low, high),
            )
        )
    claims.append(
        Claim(
            "diagram-ext-arrow-de-le-e-t1",
            "dashed diagram arrow: de <= e on T1 spaces",
            _classical_pair_check("de", "e"),
            hypothesis=lambda s: s.is_t1(),
        )
    )
    for n in (1, 2, 3):
        claims.append(
            Claim(
                f"diagram-lattice-{n}",
                f"lattice chain at level {n}: vee[{n + 1}] <= wedge[{n}] <= both "
                f"alternating values <= vee[{n}]"
                + (f" <= wedge[{n - 1}]" if n >= 2 else ""),
                _lattice_check(n),
            )
        )

    for stub_id, what in (
        ("prop-3.2n-stub", "paracompact refinement of assignment filters"),
        ("prop-3.6n-stub", "countable-union covering sets of small cardinality"),
        ("prop-3.7n-stub", "metrizable characterization of idempotent assignment filters"),
        ("prop-3.10n-stub", "metrizable squares of assignment filters"),
        ("prop-1.9-stub", "semitopological group with foredensity below density"),
        ("cor-1.10-stub", "singular-cardinal spaces separating foredensity from density"),
    ):
        claims.append(
            Claim(
                stub_id,
                f"out of finite scope: {what}",
                _stub,
                hypothesis=lambda s: False,
                note="no faithful finite instance exists; always vacuous by design",
            )
        )
    return claims


CLAIMS: tuple[Claim, ...] = tuple(_build_claims())
CLAIMS_BY_ID = {c.claim_id: c for c in CLAIMS}


def claim_ids() -> list[str]:
    return [c.claim_id for c in CLAIMS]


def get_claim(claim_id: str) -> Claim:
    try:
        return CLAIMS_BY_ID[claim_id]
    except KeyError:
        raise UnknownClaim(f"unknown claim id {claim_id!r}") from None


# -- evaluation --------------------------------------------------------------


def _evaluate(claim: Claim, space: FiniteSpace, inv: SpaceInvariants | None = None):
    if claim.hypothesis is not None and not claim.hypothesis(space):
        return VACUOUS, {}
    if inv is None:
        inv = SpaceInvariants(space)
    ok, payload = claim.evaluate(inv)
    return (PASS if ok else FAIL), payload


def check(claim_id: str, space: FiniteSpace, space_id: str = "space") -> TheoremReport:
    """Evaluate one claim on one space."""
    claim = get_claim(claim_id)
    status, payload = _evaluate(claim, space)
    return TheoremReport(
        claim_id,
        space_id,
        status,
        payload,
        space.to_json() if status == FAIL else None,
    )


def minimize_counterexample(claim: Claim, space: FiniteSpace) -> FiniteSpace:
    """Greedily delete points while the claim keeps failing."""
    current = space
    shrinking = True
    while shrinking and current.n > 1:
        shrinking = False
        for x in range(current.n):
            candidate = current.subspace(current.carrier & ~(1 << x))
            try:
                status, _ = _evaluate(claim, candidate)
            except Exception:
                continue
            if status == FAIL:
                current = candidate
                shrinking = True
                break
    return current


@dataclass
class ClaimStats:
    claim_id: str
    description: str
    expected_divergence: bool
    note: str
    pass_count: int = 0
    vacuous_count: int = 0
    fail_count: int = 0
    counterexamples: list = dataclass_field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "id": self.claim_id,
            "pass": self.pass_count,
            "vacuous": self.vacuous_count,
            "fail": self.fail_count,
            "expected_divergence": self.expected_divergence,
            "counterexamples": self.counterexamples,
        }


@dataclass
class SweepReport:
    claims: list[ClaimStats]
    seed: object
    spaces_processed: int

    @property
    def failure_count(self) -> int:
        """Failures on claims not flagged as expected divergences."""
        return sum(c.fail_count for c in self.claims if not c.expected_divergence)

    def to_json(self) -> dict:
        return {
            "claims": [c.to_json() for c in self.claims],
            "seed": self.seed,
            "spaces": self.spaces_processed,
            "failures": self.failure_count,
        }


EDGE_PROBABILITIES = (0.15, 0.3, 0.5)
MAX_COUNTEREXAMPLES = 3


def sweep_spaces(
    sizes: Sequence[int],
    random_count: int,
    seed,
    enumerate_up_to: int = 4,
) -> Iterator[tuple[str, FiniteSpace]]:
    """The space family a sweep walks: exhaustive at small sizes, seeded
    random closures of digraphs at every requested size."""
    for size in sizes:
        if size <= enumerate_up_to:
            for i, space in enumerate(enumerate_all_spaces(size)):
                yield f"enum:n={size}:{i}", space
        for i in range(random_count):
            p = EDGE_PROBABILITIES[i % len(EDGE_PROBABILITIES)]
            space = random_space(size, p, f"{seed}:{size}:{i}")
            yield f"random:n={size}:p={p}:i={i}", space


def sweep(
    claims: Sequence[str] | None = None,
    sizes: Sequence[int] = (1, 2, 3, 4),
    random_count: int = 0,
    seed=0,
    minimize: bool = True,
) -> SweepReport:
    """Run claims over enumerated plus seeded random spaces and aggregate."""
    selected = [get_claim(cid) for cid in claims] if claims is not None else list(CLAIMS)
    stats = {
        c.claim_id: ClaimStats(c.claim_id, c.description, c.expected_divergence, c.note)
        for c in selected
    }
    processed = 0
    for space_id, space in sweep_spaces(sizes, random_count, seed):
        processed += 1
        inv = SpaceInvariants(space)
        for claim in selected:
            status, payload = _evaluate(claim, space, inv)
            st = stats[claim.claim_id]
            if status == VACUOUS:
                st.vacuous_count += 1
            elif status == PASS:
                st.pass_count += 1
            else:
                st.fail_count += 1
                if len(st.counterexamples) < MAX_COUNTEREXAMPLES:
                    entry = {
                        "space_id": space_id,
                        "space": space.to_json(),
                        "payload": payload,
                    }
                    if minimize:
                        reduced = minimize_counterexample(claim, space)
                        entry["reduced_space"] = reduced.to_json()
                    st.counterexamples.append(entry)
    return SweepReport([stats[c.claim_id] for c in selected], seed, processed)
