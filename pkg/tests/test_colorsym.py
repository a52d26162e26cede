import math
from itertools import combinations

import pytest

from sepkn import (
    ListAssignment,
    SymVector,
    balanced_partition,
    colorsym,
    expand_symmetric,
    orbit_decompose,
    realize,
)
from sepkn.choosability import check_coloring
from sepkn.colorsym import _cyclic_shift, _start_class
from sepkn.setsys import mask_of, vertices_of


def test_shift_wraps():
    assert _cyclic_shift(mask_of([4]), 4) == mask_of([1])
    assert _cyclic_shift(mask_of([1, 4]), 4) == mask_of([1, 2])


def test_orbits_singletons():
    orbits = orbit_decompose(1, 4)
    assert len(orbits) == 1
    assert [vertices_of(m) for m in orbits[0]] == [(1,), (2,), (3,), (4,)]


def test_orbits_pairs_n4():
    orbits = orbit_decompose(2, 4)
    assert sorted(len(o) for o in orbits) == [2, 4]
    flattened = {m for o in orbits for m in o}
    assert len(flattened) == math.comb(4, 2)


def test_full_set_orbit_is_fixed():
    orbits = orbit_decompose(5, 5)
    assert orbits == [[mask_of(range(1, 6))]]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_orbits_partition_each_layer(n):
    for i in range(1, n + 1):
        orbits = orbit_decompose(i, n)
        masks = [m for o in orbits for m in o]
        assert len(masks) == len(set(masks)) == math.comb(n, i)
        for o in orbits:
            assert n % len(o) == 0


def test_start_class_rule():
    assert _start_class([0, 0, 0]) == 0
    assert _start_class([1, 1, 0]) == 2
    assert _start_class([2, 1, 1]) == 1


def check_balanced(classes, w, n):
    sizes = [len(c) for c in classes]
    assert max(sizes) - min(sizes) <= 1
    for cls, members in enumerate(classes):
        for mask in members:
            assert (mask >> cls) & 1, "subset placed in a class it does not contain"
    total = sum(w[i - 1] * math.comb(n, i) for i in range(1, n + 1))
    assert sum(sizes) == total


def test_balanced_single_pair_layer():
    classes = balanced_partition((0, 1, 0))
    check_balanced(classes, (0, 1, 0), 3)
    assert [len(c) for c in classes] == [1, 1, 1]


def test_balanced_full_set_only():
    classes = balanced_partition((0, 0, 1))
    assert sorted(len(c) for c in classes) == [0, 0, 1]


def test_balanced_singleton_layer():
    classes = balanced_partition((1, 0, 0, 0))
    assert [len(c) for c in classes] == [1, 1, 1, 1]
    for cls, members in enumerate(classes):
        assert members == [1 << cls]


def exhaustive_weights(n, cap):
    def rec(i, acc):
        if i == n:
            yield tuple(acc)
            return
        for wi in range(cap + 1):
            acc.append(wi)
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_balanced_partition_exhaustive_small(n):
    for w in exhaustive_weights(n, 2):
        total = sum(w[i - 1] * math.comb(n, i) for i in range(1, n + 1))
        if total > 200:
            continue
        check_balanced(balanced_partition(w), w, n)


@pytest.mark.parametrize("n", [5, 6])
def test_balanced_partition_random_larger(rng, n):
    for _ in range(40):
        w = tuple(rng.randint(0, 2) for _ in range(n))
        total = sum(w[i - 1] * math.comb(n, i) for i in range(1, n + 1))
        if total > 200:
            continue
        check_balanced(balanced_partition(w), w, n)


def test_balance_holds_after_every_orbit():
    # replay the construction orbit by orbit for a mixed weight vector
    n, w = 5, (1, 2, 0, 1, 1)
    sizes = [0] * n
    from sepkn.colorsym import orbit_decompose as od

    for layer in range(1, n + 1):
        for orbit in od(layer, n):
            for _ in range(w[layer - 1]):
                j = _start_class(sizes)
                k0 = next(k for k, m in enumerate(orbit) if (m >> j) & 1)
                for step in range(len(orbit)):
                    sizes[(j + step) % n] += 1
                assert max(sizes) - min(sizes) <= 1


def test_colorsym_three_cycle_of_pairs():
    L = realize(expand_symmetric(SymVector(3, (0, 1, 0))))
    res = colorsym(L, 1)
    assert res.ok
    assert check_coloring(L, 1, res.coloring)
    used = set().union(*res.coloring)
    assert len(used) == 3


def test_colorsym_disjoint_lists_finish_in_first_layer():
    L = ListAssignment.of([[1, 2], [3, 4], [5, 6]])
    res = colorsym(L, 2)
    assert res.ok and res.w == (2, 2, 2)


def test_colorsym_example_failure(example4):
    res = colorsym(example4, 3)
    assert not res.ok
    assert res.coloring is None
    assert sum(res.w) == 10  # every color was handed out
    assert min(res.w) < 3


def test_colorsym_example_succeeds_at_two(example4):
    res = colorsym(example4, 2)
    assert res.ok
    assert check_coloring(example4, 2, res.coloring)


def test_colorsym_truncates_to_b(example4):
    res = colorsym(example4, 1)
    assert res.ok
    assert all(len(c) == 1 for c in res.coloring)


def test_colorsym_tight_pair_grid_n5():
    # all ten pairs weight one: tight at b = 2, solvable only by orbit order
    L = realize(expand_symmetric(SymVector(5, (0, 1, 0, 0, 0))))
    res = colorsym(L, 2)
    assert res.ok
    assert check_coloring(L, 2, res.coloring)


def test_colorsym_json(example4):
    failed = colorsym(example4, 3).to_json()
    assert failed["failed"] is True and len(failed["w"]) == 4
    good = colorsym(example4, 2).to_json()
    assert len(good["assigned"]) == 4
