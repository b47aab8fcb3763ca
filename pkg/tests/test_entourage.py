import pytest
from hypothesis import given, settings, strategies as st

from covercalc import (
    CarrierMismatch,
    Entourage,
    Word,
    all_words,
    full_mask,
    iter_bits,
    mask_of,
)


def entourages(max_n=6):
    """Random reflexive relations on carriers of 1..max_n points."""

    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        rows = tuple(
            (1 << x) | (draw(st.integers(0, full_mask(n))))
            for x in range(n)
        )
        return Entourage(n, rows)

    return build()


def all_entourages(n):
    """Every reflexive relation on n points (exhaustive, tiny n only)."""
    choices = [[(1 << x) | m for m in range(1 << n)] for x in range(n)]
    choices = [sorted(set(c)) for c in choices]

    def extend(x, rows):
        if x == n:
            yield Entourage(n, tuple(rows))
            return
        for r in choices[x]:
            yield from extend(x + 1, rows + [r])

    yield from extend(0, [])


ZIGZAG = Entourage(3, (mask_of([0, 1]), mask_of([1]), mask_of([1, 2])))
SIERPINSKI_V = Entourage.from_pairs(2, [(0, 1)])


def test_requires_diagonal():
    with pytest.raises(ValueError):
        Entourage(2, (0b01, 0b01))


def test_inverse_examples():
    assert Entourage.diagonal(3).inverse() == Entourage.diagonal(3)
    assert SIERPINSKI_V.inverse() == Entourage.from_pairs(2, [(1, 0)])


@given(entourages())
def test_inverse_involution(u):
    assert u.inverse().inverse() == u


@given(entourages())
def test_compose_identity(u):
    d = Entourage.diagonal(u.n)
    assert u.compose(d) == u
    assert d.compose(u) == u


@given(entourages(4), entourages(4))
def test_compose_inverse_antihomomorphism(u, v):
    if u.n != v.n:
        with pytest.raises(CarrierMismatch):
            u.compose(v)
        return
    assert u.compose(v).inverse() == v.inverse().compose(u.inverse())


def test_compose_zigzag_example():
    got = ZIGZAG.inverse().compose(ZIGZAG)
    expected = Entourage.from_pairs(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
    assert got == expected


def brute_compose(u, v):
    pairs = [
        (x, z)
        for x in range(u.n)
        for z in range(u.n)
        if any(u.contains_pair(x, y) and v.contains_pair(y, z) for y in range(u.n))
    ]
    return Entourage.from_pairs(u.n, pairs)


@given(entourages(4), entourages(4))
def test_compose_matches_pairwise_definition(u, v):
    if u.n != v.n:
        return
    assert u.compose(v) == brute_compose(u, v)


def test_verbal_power_examples():
    for u in (ZIGZAG, SIERPINSKI_V, Entourage.all_pairs(3)):
        assert u.verbal_power(Word("")) == Entourage.diagonal(u.n)
    u = ZIGZAG
    assert u.verbal_power(Word("-+")) == u.inverse().compose(u)
    assert u.verbal_power(Word("+")) == u
    assert u.verbal_power(Word("+-")) == u.compose(u.inverse())


@given(entourages(5), st.sampled_from(all_words(3)), st.sampled_from(all_words(3)))
def test_verbal_power_multiplicative(u, v, w):
    assert u.verbal_power(v.concat(w)) == u.verbal_power(v).compose(u.verbal_power(w))


def test_verbal_power_multiplicative_exhaustive_n2():
    words = all_words(2)
    for u in all_entourages(2):
        for v in words:
            for w in words:
                assert u.verbal_power(v + w) == u.verbal_power(v).compose(u.verbal_power(w))


@given(entourages(5))
def test_subword_monotone(u):
    pool = all_words(3)
    powers = {w.letters: u.verbal_power(w) for w in pool}
    for v in pool:
        for w in pool:
            if v.is_subword_of(w):
                assert powers[v.letters].subset(powers[w.letters])


def test_subword_monotonicity_fails_for_unordered_injection():
    # "+-" embeds into "-+" by an order-forgetting injection, yet the "+-"
    # power escapes the "-+" power: the subsequence reading is the right one.
    u = ZIGZAG
    assert not u.verbal_power(Word("+-")).subset(u.verbal_power(Word("-+")))


@given(entourages(5), entourages(5), st.sampled_from(all_words(3)))
def test_power_monotone_in_entourage(u, v, w):
    if u.n != v.n:
        return
    big = u.union(v)
    assert u.verbal_power(w).subset(big.verbal_power(w))


@given(entourages(5), st.sampled_from(all_words(4)))
def test_idempotent_power_depends_on_collapsed_word(u, w):
    t = u.stabilized_equivalence()[0]  # an equivalence is transitive idempotent
    assert t.verbal_power(w) == t.verbal_power(w.collapse_runs())


def test_boolean_ops():
    u, v = ZIGZAG, ZIGZAG.inverse()
    assert u.intersect(v).is_symmetric()
    assert u.union(Entourage.diagonal(3)) == u
    assert u.intersect(u) == u
    assert u.subset(u.union(v)) and u.intersect(v).subset(u)


def test_subset_partial_order():
    pool = list(all_entourages(2))
    for a in pool:
        assert a.subset(a)
        for b in pool:
            if a.subset(b) and b.subset(a):
                assert a == b


@given(entourages(5), st.integers(0, 20))
def test_ball_union_of_rows(u, seed):
    import random

    rng = random.Random(seed)
    mask = rng.getrandbits(u.n)
    expected = 0
    for x in iter_bits(mask):
        expected |= u.rows[x]
    assert u.ball(mask) == expected
    assert mask & ~u.ball(mask) == 0  # reflexivity keeps the set inside its ball


@given(entourages(4), entourages(4), st.integers(0, 15))
def test_ball_chains_through_composition(u, v, mask):
    if u.n != v.n:
        return
    mask &= full_mask(u.n)
    assert u.compose(v).ball(mask) == v.ball(u.ball(mask))


def test_stabilized_equivalence_examples():
    d = Entourage.diagonal(3)
    assert d.stabilized_equivalence() == (d, 1)
    e, k = ZIGZAG.stabilized_equivalence()
    assert e == Entourage.all_pairs(3) and k == 2
    blocks = Entourage(3, (0b011, 0b011, 0b100))
    assert blocks.stabilized_equivalence() == (blocks, 1)


def union_find_closure(u):
    parent = list(range(u.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(u.n):
        for y in iter_bits(u.rows[x]):
            parent[find(y)] = find(x)
    rows = []
    for x in range(u.n):
        rows.append(mask_of(y for y in range(u.n) if find(y) == find(x)))
    return Entourage(u.n, tuple(rows))


@given(entourages())
def test_stabilized_equivalence_is_least_equivalence(u):
    e, k = u.stabilized_equivalence()
    assert 1 <= k <= max(u.n, 1)
    assert e.is_equivalence()
    assert u.subset(e)
    sym = u.union(u.inverse())
    power = Entourage.diagonal(u.n)
    for _ in range(u.n):
        power = power.compose(sym)
        assert power.subset(e)
    assert e == union_find_closure(u)


def test_json_round_trip():
    for u in (ZIGZAG, SIERPINSKI_V, Entourage.diagonal(4), Entourage.all_pairs(3)):
        data = u.to_json()
        assert all(x != y for x, y in data["pairs"])
        assert Entourage.from_json(data) == u
