import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sepkn import (
    DomainError,
    ListAssignment,
    PIVector,
    amplitude,
    assignment_count,
    list_size,
    pair_intersection,
    pi_vector,
    proper_intersections,
    realize,
)
from sepkn.setsys import mask_of, subsets_canonical, vertices_of

from conftest import EXAMPLE_DENSE, random_assignment


def brute_blocks(L: ListAssignment) -> dict[int, frozenset[int]]:
    """Independent oracle: the literal intersect-minus-union formula."""
    out = {}
    for mask in subsets_canonical(L.n):
        inside = [L.lists[i] for i in range(L.n) if (mask >> i) & 1]
        outside = [L.lists[i] for i in range(L.n) if not (mask >> i) & 1]
        block = frozenset.intersection(*inside)
        for other in outside:
            block -= other
        out[mask] = block
    return out


def test_canonical_order_n4():
    order = [vertices_of(m) for m in subsets_canonical(4)]
    assert order[:6] == [(1,), (2,), (3,), (4,), (1, 2), (1, 3)]
    assert order[-1] == (1, 2, 3, 4)
    assert len(order) == 15


def test_example_blocks(example4):
    blocks = proper_intersections(example4)
    assert blocks[mask_of([1])] == frozenset({5})
    assert blocks[mask_of([1, 2])] == frozenset({1, 2})
    assert blocks[mask_of([2, 3, 4])] == frozenset({6})
    assert blocks[mask_of([1, 2, 3, 4])] == frozenset()


def test_example_vector(example4):
    assert pi_vector(example4).dense() == EXAMPLE_DENSE


def test_single_vertex_blocks():
    L = ListAssignment.of([[1, 2]])
    assert proper_intersections(L)[1] == frozenset({1, 2})


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_blocks_match_formula_oracle(rng, n):
    for _ in range(20):
        L = random_assignment(rng, n)
        assert proper_intersections(L) == brute_blocks(L)


def test_blocks_partition_union(rng):
    for _ in range(30):
        L = random_assignment(rng, 3, max_size=3, palette=9)
        blocks = list(proper_intersections(L).values())
        union = frozenset().union(*blocks)
        assert union == L.union()
        assert sum(len(b) for b in blocks) == len(union)  # pairwise disjoint


def test_identical_lists_vector():
    L = ListAssignment.of([[1, 2], [1, 2]])
    v = pi_vector(L)
    assert v.get(mask_of([1])) == 0
    assert v.get(mask_of([2])) == 0
    assert v.get(mask_of([1, 2])) == 2


def test_per_vertex_sums_are_list_sizes(rng):
    for _ in range(20):
        L = random_assignment(rng, 4)
        v = pi_vector(L)
        for i in range(1, 5):
            assert list_size(v, i) == len(L.lists[i - 1])


def test_example_sums_and_pairs(example4):
    v = pi_vector(example4)
    assert [list_size(v, i) for i in range(1, 5)] == [5, 5, 5, 5]
    assert pair_intersection(v, 1, 2) == 3
    assert pair_intersection(v, 1, 4) == 1


def test_pair_intersection_matches_sets(rng):
    for _ in range(20):
        L = random_assignment(rng, 4)
        v = pi_vector(L)
        for i in range(1, 5):
            for j in range(i + 1, 5):
                assert pair_intersection(v, i, j) == len(L.lists[i - 1] & L.lists[j - 1])


def test_pair_intersection_rejects_equal_vertices():
    v = PIVector(2, {3: 1})
    with pytest.raises(DomainError):
        pair_intersection(v, 1, 1)


def test_amplitude_examples(example4):
    v = pi_vector(example4)
    assert amplitude(v, [1, 2, 3]) == 8
    assert amplitude(v, [1, 2, 3, 4]) == 10
    assert amplitude(v, [2]) == list_size(v, 2)
    with pytest.raises(DomainError):
        amplitude(v, [])


def test_additive_sieve_matches_sets(rng):
    for _ in range(20):
        L = random_assignment(rng, 4)
        v = pi_vector(L)
        assert amplitude(v, range(1, 5)) == v.total() == len(L.union())


def test_subset_amplitude_matches_induced_union(rng):
    # amplitude over a sub-subset, computed from the full vector, equals the
    # union of just those lists
    for _ in range(20):
        L = random_assignment(rng, 4)
        v = pi_vector(L)
        for mask in subsets_canonical(4):
            vs = vertices_of(mask)
            union = frozenset().union(*(L.lists[i - 1] for i in vs))
            assert amplitude(v, vs) == len(union)


def test_intersection_reconstruction(rng):
    # |intersection over S| equals the sum of blocks above S
    for _ in range(20):
        L = random_assignment(rng, 4)
        v = pi_vector(L)
        for mask in subsets_canonical(4):
            inter = frozenset.intersection(
                *[L.lists[i] for i in range(4) if (mask >> i) & 1]
            )
            above = sum(s for m, s in v.items() if (m & mask) == mask)
            assert len(inter) == above


def test_realize_round_trip_example(example4):
    v = pi_vector(example4)
    assert pi_vector(realize(v)) == v
    assert pi_vector(realize(v, color_base=7)) == v


def test_realize_full_block():
    v = PIVector(3, {0b111: 4})
    L = realize(v)
    assert L.lists[0] == L.lists[1] == L.lists[2]
    assert len(L.lists[0]) == 4


def test_realize_disjoint_singletons():
    v = PIVector(3, {0b001: 2, 0b010: 2, 0b100: 2})
    L = realize(v)
    assert not (L.lists[0] & L.lists[1])
    assert not (L.lists[0] & L.lists[2])
    assert len(L.union()) == 6


@st.composite
def small_vectors(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    masks = subsets_canonical(n)
    counts = draw(
        st.lists(st.integers(min_value=0, max_value=3), min_size=len(masks), max_size=len(masks))
    )
    return PIVector(n, zip(masks, counts))


@settings(max_examples=60, deadline=None)
@given(small_vectors())
def test_realize_round_trip_property(v):
    assert pi_vector(realize(v)) == v


@settings(max_examples=60, deadline=None)
@given(small_vectors())
def test_amplitude_monotone_in_subset(v):
    full = amplitude(v, range(1, v.n + 1))
    for i in range(1, v.n + 1):
        assert amplitude(v, [i]) <= full


def test_assignment_count_full_block():
    # single full block of size a over palette n*a
    n, a = 3, 2
    v = PIVector(n, {(1 << n) - 1: a})
    assert assignment_count(v, n * a) == math.comb(n * a, a)


def test_assignment_count_zero_vector():
    assert assignment_count(PIVector(3, {}), 5) == 1


def test_assignment_count_two_singletons():
    v = PIVector(2, {0b01: 1, 0b10: 1})
    assert assignment_count(v, 2) == 2


def test_assignment_count_small_palette_rejected():
    v = PIVector(2, {0b11: 3})
    with pytest.raises(DomainError):
        assignment_count(v, 2)


def sequential_count(sizes, palette):
    """Independent route: pick each block in turn from what is left."""
    total = 0
    ways = 1
    for size in sizes:
        ways *= math.comb(palette - total, size)
        total += size
    return ways


def test_assignment_count_order_invariance(rng):
    # the sequential product gives the same number over any block order
    for _ in range(10):
        L = random_assignment(rng, 3, max_size=3, palette=9)
        v = pi_vector(L)
        sizes = [s for _, s in v.items()]
        palette = v.total() + 3
        forward = sequential_count(sizes, palette)
        backward = sequential_count(list(reversed(sizes)), palette)
        assert forward == backward == assignment_count(v, palette)


def test_json_round_trips(example4):
    v = pi_vector(example4)
    assert PIVector.from_json(v.to_json()) == v
    assert ListAssignment.from_json(example4.to_json()) == example4


def test_malformed_json_rejected():
    with pytest.raises(DomainError):
        ListAssignment.from_json({"lists": [[1]], "n": 3})
    with pytest.raises(DomainError):
        PIVector.from_json({"n": 2, "counts": [{"subset": [9], "size": 1}]})
