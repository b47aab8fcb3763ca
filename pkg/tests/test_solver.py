import random
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

import pytest

from covercalc import (
    CoverInstance,
    Infeasible,
    MIN_COVER,
    MIN_HITTING,
    SubsetInstance,
    discrete,
    mask_of,
    max_subset,
    min_cover,
    one_nonisolated,
    sierpinski,
)
from covercalc.solver import PREDICATES


def cover(universe, sets, objective=MIN_COVER):
    return min_cover(CoverInstance(mask_of(universe), tuple(mask_of(s) for s in sets), objective))


def test_min_cover_examples():
    sol = cover([0, 1, 2], [[0, 1], [1, 2], [2]])
    assert sol.size == 2 and sol.witness == (0, 1)
    assert cover([0], [[0]]).size == 1
    sol = cover(range(4), [[0], [1], [2], [3]])
    assert sol.size == 4 and sol.witness == (0, 1, 2, 3)


def test_min_cover_infeasible():
    with pytest.raises(Infeasible):
        cover([0, 1], [[0]])


def test_min_hitting_examples():
    sol = cover([0, 1, 2], [[0, 1], [1, 2]], MIN_HITTING)
    assert sol.size == 1 and sol.witness == (1,)
    sol = cover([0, 1, 2], [[0], [1], [2]], MIN_HITTING)
    assert sol.size == 3
    with pytest.raises(Infeasible):
        cover([0, 1], [[0], []], MIN_HITTING)


def brute_min_cover(universe_mask, sets):
    best = None
    for size in range(len(sets) + 1):
        for combo in combinations(range(len(sets)), size):
            covered = 0
            for i in combo:
                covered |= sets[i]
            if covered & universe_mask == universe_mask:
                return size, combo
    return best


def brute_min_hitting(universe_mask, sets):
    elements = [e for e in range(universe_mask.bit_length()) if universe_mask >> e & 1]
    for size in range(len(elements) + 1):
        for combo in combinations(elements, size):
            picked = mask_of(combo)
            if all(s & picked for s in sets):
                return size, combo
    raise AssertionError("unreachable for feasible instances")


def random_instance(rng, max_universe=8, max_sets=12):
    n = rng.randint(1, max_universe)
    universe = (1 << n) - 1
    k = rng.randint(1, max_sets - 1)
    sets = [rng.getrandbits(n) for _ in range(k)]
    missing = universe & ~mask_of(
        e for s in sets for e in range(n) if s >> e & 1
    )
    sets.append(missing or rng.getrandbits(n) | 1)
    return universe, tuple(sets)


def test_min_cover_matches_enumeration_on_random_instances():
    rng = random.Random(2024)
    for _ in range(150):
        universe, sets = random_instance(rng)
        sol = min_cover(CoverInstance(universe, sets, MIN_COVER))
        size, combo = brute_min_cover(universe, sets)
        assert sol.size == size
        assert sol.witness == combo  # enumeration order is lexicographic too


def test_min_hitting_matches_enumeration_on_random_instances():
    rng = random.Random(7)
    for _ in range(120):
        universe, sets = random_instance(rng)
        sets = tuple(s & universe for s in sets if s & universe)
        if not sets:
            continue
        sol = min_cover(CoverInstance(universe, sets, MIN_HITTING))
        size, combo = brute_min_hitting(universe, sets)
        assert sol.size == size
        assert sol.witness == combo


def test_witness_is_lexicographically_least():
    # two optimal covers exist: {0,2} and {1,2}; lexicographic order picks {0,2}
    sol = cover([0, 1, 2, 3], [[0, 1], [0, 1], [2, 3]])
    assert sol.witness == (0, 2)


def test_determinism_across_runs_and_threads():
    rng = random.Random(99)
    instances = [random_instance(rng) for _ in range(40)]
    expected = [min_cover(CoverInstance(u, s, MIN_COVER)) for u, s in instances]

    def solve(pair):
        u, s = pair
        return min_cover(CoverInstance(u, s, MIN_COVER))

    for _ in range(3):
        assert [solve(p) for p in instances] == expected
    with ThreadPoolExecutor(max_workers=4) as pool:
        assert list(pool.map(solve, instances)) == expected
        assert list(pool.map(solve, instances[::-1]))[::-1] == expected


def test_universe_budget_guard():
    with pytest.raises(ValueError):
        CoverInstance(1 << 70, (1,), MIN_COVER)


def test_max_subset_examples():
    assert max_subset(SubsetInstance(discrete(4), "DISCRETE_SUBSPACE")).size == 4
    sol = max_subset(SubsetInstance(one_nonisolated(5), "DISCRETE_SUBSPACE"))
    assert sol.size == 4 and sol.witness == (0, 1, 2, 3)
    assert max_subset(SubsetInstance(sierpinski(), "DISJOINT_MIN_OPENS")).size == 1


def test_max_subset_brute_parity(small_spaces):
    for sp in small_spaces:
        for predicate, fn in PREDICATES.items():
            sol = max_subset(SubsetInstance(sp, predicate))
            best = max(
                (mask.bit_count() for mask in range(1 << sp.n) if fn(sp, mask)),
                default=0,
            )
            assert sol.size == best
            assert fn(sp, mask_of(sol.witness))


def test_predicates_are_hereditary(small_spaces):
    for sp in small_spaces:
        for fn in PREDICATES.values():
            feasible = [m for m in range(1 << sp.n) if fn(sp, m)]
            for m in feasible:
                for x in range(sp.n):
                    if m >> x & 1:
                        assert fn(sp, m & ~(1 << x))


def test_max_subset_respects_candidate_mask():
    sp = discrete(4)
    sol = max_subset(SubsetInstance(sp, "DISCRETE_SUBSPACE", mask_of([1, 3])))
    assert sol.size == 2 and sol.witness == (1, 3)
