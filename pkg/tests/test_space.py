import json

import pytest

from covercalc import (
    BudgetExceeded,
    Entourage,
    FiniteSpace,
    NotATopology,
    UnknownName,
    antidiscrete,
    chain,
    count_reflexive_transitive_relations,
    discrete,
    enumerate_all_spaces,
    generate_topology,
    mask_of,
    named,
    one_nonisolated,
    partition_space,
    points_of,
    random_space,
    sierpinski,
    zigzag,
)


def test_from_open_sets_sierpinski():
    sp = FiniteSpace.from_open_sets(2, [[], [1], [0, 1]])
    assert sp == sierpinski()
    assert points_of(sp.min_open[0]) == (0, 1)
    assert points_of(sp.min_open[1]) == (1,)


def test_from_open_sets_missing_carrier():
    with pytest.raises(NotATopology):
        FiniteSpace.from_open_sets(2, [[], [0], [1]])


def test_from_open_sets_union_violation_carries_witness():
    with pytest.raises(NotATopology) as err:
        FiniteSpace.from_open_sets(3, [[], [0], [1], [0, 1, 2]])
    assert err.value.witness == ((0,), (1,))


def test_from_open_sets_discrete():
    opens = [[x for x in range(3) if m >> x & 1] for m in range(8)]
    assert FiniteSpace.from_open_sets(3, opens) == discrete(3)


def test_from_preorder_examples():
    assert FiniteSpace.from_preorder(3, []) == discrete(3)
    assert FiniteSpace.from_preorder(2, [(0, 1)]) == sierpinski()
    zz = FiniteSpace.from_preorder(3, [(0, 1), (2, 1)])
    assert zz == zigzag(3)
    assert [points_of(u) for u in zz.min_open] == [(0, 1), (1,), (1, 2)]


def test_from_preorder_takes_transitive_closure():
    sp = FiniteSpace.from_preorder(3, [(0, 1), (1, 2)])
    assert sp == chain(3)


def test_coherence_validation():
    with pytest.raises(NotATopology) as err:
        FiniteSpace(3, (mask_of([0, 1]), mask_of([1]), mask_of([0, 2])))
    assert err.value.witness == (2, 0)
    with pytest.raises(NotATopology):
        FiniteSpace(2, (0b01, 0b01))  # 1 outside its own minimal open


def test_minimal_entourage_examples():
    assert discrete(3).minimal_entourage() == Entourage.diagonal(3)
    assert antidiscrete(3).minimal_entourage() == Entourage.all_pairs(3)
    oni = one_nonisolated(5)
    v = oni.minimal_entourage()
    assert v == Entourage.from_pairs(5, [(4, y) for y in range(5)])
    assert v.compose(v) == v  # idempotent by coherence


def test_closure_interior_dense():
    sp = sierpinski()
    assert sp.closure(mask_of([1])) == mask_of([0, 1])
    assert sp.is_dense(mask_of([1]))
    assert sp.closure(0) == 0
    assert sp.interior(sp.carrier) == sp.carrier
    zz = zigzag(3)
    assert zz.closure(mask_of([1])) == mask_of([0, 1, 2])
    v = zz.minimal_entourage()
    for mask in range(8):
        assert zz.closure(mask) == v.inverse().ball(mask)


def test_kuratowski_closure_laws(small_spaces):
    for sp in small_spaces:
        assert sp.closure(0) == 0
        for a in range(1 << sp.n):
            ca = sp.closure(a)
            assert a & ~ca == 0
            assert sp.closure(ca) == ca
            for b in range(1 << sp.n):
                assert sp.closure(a | b) == ca | sp.closure(b)


def test_predicates():
    assert discrete(3).is_discrete() and discrete(3).is_t1()
    assert discrete(3).is_partition_topology() and discrete(3).is_quasi_regular()
    sp = sierpinski()
    assert not sp.is_quasi_regular()
    assert not sp.is_t1()
    pt = partition_space([2, 1])
    assert pt.is_partition_topology() and not pt.is_t1()
    assert pt.is_quasi_regular()
    assert not zigzag(3).is_partition_topology()


def test_quasi_regular_iff_partition(enumerated_spaces):
    # At finite scale the quasi-regularity condition pins down exactly the
    # partition topologies; the claim harness leans on this being discovered.
    for sp in enumerated_spaces:
        assert sp.is_quasi_regular() == sp.is_partition_topology()


def test_normal_and_collectively_hausdorff_on_partitions():
    for sp in (discrete(3), partition_space([2, 2]), antidiscrete(4)):
        assert sp.is_normal()
        assert sp.is_collectively_hausdorff()


def test_pervin_entourage_examples():
    sp = sierpinski()
    assert sp.pervin_entourage(sp.carrier) == Entourage.all_pairs(2)
    assert sp.pervin_entourage(0) == Entourage.all_pairs(2)
    with pytest.raises(NotATopology):
        sp.pervin_entourage(mask_of([0]))  # {0} is not open here


def test_pervin_minimum_is_minimal_entourage(enumerated_spaces):
    for sp in enumerated_spaces:
        assert sp.pervin_minimum() == sp.minimal_entourage()


def test_pervin_minimum_on_random_spaces():
    for i in range(100):
        sp = random_space(1 + i % 8, 0.3, f"pervin:{i}")
        assert sp.pervin_minimum() == sp.minimal_entourage()


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_all_spaces(2)) == 4
    assert sum(1 for _ in enumerate_all_spaces(4)) == 355
    assert count_reflexive_transitive_relations(2) == 4


def test_enumeration_is_duplicate_free_and_budgeted():
    seen = {sp.min_open for sp in enumerate_all_spaces(3)}
    assert len(seen) == 29
    with pytest.raises(BudgetExceeded):
        list(enumerate_all_spaces(9))


def test_named_spaces():
    assert named("sierpinski") == sierpinski()
    assert named("discrete:3") == discrete(3)
    assert named("one_nonisolated:5") == one_nonisolated(5)
    assert named("partition:2,1") == partition_space([2, 1])
    assert named("chain:2") == sierpinski()
    with pytest.raises(UnknownName):
        named("moebius:4")
    with pytest.raises(UnknownName):
        named("discrete")


def test_random_space_is_seeded_and_reproducible():
    a = random_space(6, 0.3, 42)
    b = random_space(6, 0.3, 42)
    c = random_space(6, 0.3, 43)
    assert a == b
    assert a != c or a.min_open == c.min_open  # different seed, usually different space


def test_opens_are_exactly_unions_of_minimal_opens(small_spaces):
    for sp in small_spaces:
        opens = set(sp.opens())
        assert 0 in opens and sp.carrier in opens
        expected = {0}
        for mask in range(1 << sp.n):
            acc = 0
            for x in range(sp.n):
                if mask >> x & 1:
                    acc |= sp.min_open[x]
            expected.add(acc)
        assert opens == expected
        for o in opens:
            assert sp.is_open(o)


def test_subspace():
    zz = zigzag(3)
    sub = zz.subspace(mask_of([0, 2]))
    assert sub == discrete(2)
    sub2 = zz.subspace(mask_of([0, 1]))
    assert sub2 == sierpinski()


def test_json_round_trip(small_spaces):
    for sp in small_spaces:
        data = json.loads(json.dumps(sp.to_json()))
        assert FiniteSpace.from_json(data) == sp
    labeled = FiniteSpace(2, (0b11, 0b10), ("top", "bottom"))
    again = FiniteSpace.from_json(labeled.to_json())
    assert again.labels == ("top", "bottom")
    via_edges = FiniteSpace.from_json({"n": 2, "preorder_edges": [[0, 1]]})
    assert via_edges == sierpinski()


def test_json_sets_are_sorted():
    data = one_nonisolated(3).to_json()
    for row in data["min_open"]:
        assert row == sorted(row)


def test_generate_topology_closes_subbasis():
    sp = generate_topology(3, [[0, 1], [1, 2]])
    assert points_of(sp.min_open[1]) == (1,)  # the intersection appears
    assert points_of(sp.min_open[0]) == (0, 1)
    with pytest.raises(NotATopology):
        FiniteSpace.from_open_sets(3, [[], [0, 1], [1, 2], [0, 1, 2]])


def test_empty_and_single_point_spaces():
    empty = FiniteSpace(0, ())
    assert empty.carrier == 0
    assert list(enumerate_all_spaces(0)) == [empty]
    single = FiniteSpace(1, (1,))
    assert single.is_discrete()
    assert list(enumerate_all_spaces(1)) == [single]
