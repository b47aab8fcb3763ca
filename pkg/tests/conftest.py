import pytest

from covercalc import enumerate_all_spaces, random_space

EDGE_PROBABILITIES = (0.15, 0.3, 0.5)


def spaces_up_to(n):
    """All labeled topologies on at most n points."""
    out = []
    for size in range(1, n + 1):
        out.extend(enumerate_all_spaces(size))
    return out


def random_spaces(count, max_n, seed):
    """Seeded random spaces with sizes cycling 1..max_n."""
    out = []
    for i in range(count):
        size = 1 + i % max_n
        p = EDGE_PROBABILITIES[i % len(EDGE_PROBABILITIES)]
        out.append(random_space(size, p, f"{seed}:{i}"))
    return out


@pytest.fixture(scope="session")
def small_spaces():
    return spaces_up_to(3)


@pytest.fixture(scope="session")
def enumerated_spaces():
    return spaces_up_to(4)
