import pytest

from sepkn import (
    BudgetError,
    DomainError,
    ListAssignment,
    PIVector,
    amplitude_ok,
    brute_force_color,
    is_abc_choosable,
    pi_vector,
    realize,
)
from sepkn.choosability import check_coloring

from conftest import random_assignment


def test_example_amplitude_verdict(example4):
    v = pi_vector(example4)
    verdict = amplitude_ok(v, 3)
    assert not verdict.colorable
    assert verdict.violating_subset == (1, 2, 3)
    assert verdict.amplitude == 8
    assert amplitude_ok(v, 2).colorable


def test_disjoint_singletons_colorable():
    v = PIVector(3, {0b001: 2, 0b010: 2, 0b100: 2})
    assert amplitude_ok(v, 2).colorable


def test_violating_subset_is_minimum_cardinality():
    # singletons are fine (size 2 each) but the pair {1,2} sees only 2 colors
    v = PIVector(3, {0b011: 2, 0b100: 2})
    verdict = amplitude_ok(v, 2)
    assert not verdict.colorable
    assert verdict.violating_subset == (1, 2)
    assert verdict.amplitude == 2


def test_brute_force_example(example4):
    assert not brute_force_color(example4, 3).colorable
    verdict = brute_force_color(example4, 2)
    assert verdict.colorable
    assert check_coloring(example4, 2, verdict.witness)


def test_brute_force_single_vertex():
    L = ListAssignment.of([[1, 2, 3]])
    assert brute_force_color(L, 3).colorable
    assert not brute_force_color(L, 4).colorable


def test_brute_force_guard_rails():
    big = ListAssignment.of([[i] for i in range(7)])
    with pytest.raises(BudgetError):
        brute_force_color(big, 1)
    wide = ListAssignment.of([list(range(30)), list(range(30, 60))])
    with pytest.raises(BudgetError):
        brute_force_color(wide, 1)


def test_oracles_agree_on_random_instances(rng):
    for _ in range(40):
        L = random_assignment(rng, 4, max_size=4, palette=8)
        v = pi_vector(L)
        for b in (1, 2, 3):
            assert amplitude_ok(v, b).colorable == brute_force_color(L, b).colorable


def test_witnesses_always_verify(rng):
    for _ in range(40):
        L = random_assignment(rng, 3, max_size=4, palette=7)
        for b in (1, 2):
            verdict = brute_force_color(L, b)
            if verdict.colorable:
                assert check_coloring(L, b, verdict.witness)


def test_is_abc_choosable_three_vertices():
    ok, witness = is_abc_choosable(3, 5, 2, 4)
    assert ok and witness is None
    ok, witness = is_abc_choosable(3, 5, 2, 5)
    assert not ok
    assert witness is not None and witness.n == 3
    # the witness is a genuine violating assignment
    assert not amplitude_ok(witness, 2).colorable


def test_is_abc_choosable_large_a():
    for n in (2, 3, 4):
        ok, _ = is_abc_choosable(n, 3 * n, 3, 3 * n)
        assert ok


def test_is_abc_choosable_padded_witness_separating():
    ok, witness = is_abc_choosable(4, 2, 1, 2)
    assert not ok
    from sepkn import pair_intersection

    for i in range(1, 5):
        for j in range(i + 1, 5):
            assert pair_intersection(witness, i, j) <= 2


def test_is_abc_choosable_domain_checks():
    with pytest.raises(DomainError):
        is_abc_choosable(3, 2, 3, 1)  # b > a
    with pytest.raises(DomainError):
        is_abc_choosable(3, 2, 1, 5)  # c > a


def test_choosability_monotone_in_c():
    # if choosable at c, also at c-1 (smaller separation is easier)
    for (n, a, b) in [(3, 4, 2), (4, 5, 3), (3, 3, 1)]:
        for c in range(1, a + 1):
            ok_hi, _ = is_abc_choosable(n, a, b, c)
            ok_lo, _ = is_abc_choosable(n, a, b, c - 1)
            assert ok_lo or not ok_hi


def test_choosability_monotone_in_n():
    # dropping a vertex cannot hurt
    for (a, b, c) in [(4, 2, 3), (5, 2, 4), (3, 1, 2)]:
        for n in (3, 4):
            ok_big, _ = is_abc_choosable(n + 1, a, b, c)
            ok_small, _ = is_abc_choosable(n, a, b, c)
            assert ok_small or not ok_big


def test_verdict_json(example4):
    v = pi_vector(example4)
    obj = amplitude_ok(v, 3).to_json()
    assert obj == {
        "colorable": False,
        "witness": None,
        "violating_subset": [1, 2, 3],
        "amplitude": 8,
    }
