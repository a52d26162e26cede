import random

import pytest

from sepkn import ListAssignment

# 4-vertex fixture with known intersection structure used throughout
EXAMPLE_LISTS = [
    [1, 2, 3, 4, 5],
    [1, 2, 3, 6, 7],
    [3, 4, 6, 7, 8],
    [4, 6, 8, 9, 10],
]
EXAMPLE_DENSE = (1, 0, 0, 2, 2, 0, 0, 1, 0, 1, 1, 0, 1, 1, 0)


@pytest.fixture
def example4() -> ListAssignment:
    return ListAssignment.of(EXAMPLE_LISTS)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)


def random_assignment(rng: random.Random, n: int, max_size: int = 5, palette: int = 12):
    lists = [
        rng.sample(range(palette), rng.randint(1, max_size)) for _ in range(n)
    ]
    return ListAssignment.of(lists)
