from fractions import Fraction

import pytest

from sepkn import (
    BudgetError,
    DomainError,
    closed_form_L3,
    count_classes,
    degree_fit,
    enumerate_vectors,
    list_size,
    tight_count_L3,
)


def test_two_vertices_linear():
    for a in range(11):
        assert count_classes(2, a).total == a + 1


def test_single_vertex_is_always_one_class():
    for a in range(6):
        assert count_classes(1, a).total == 1


def test_three_vertices_small_values():
    assert count_classes(3, 1).total == 5
    assert count_classes(3, 1).residue_tight == 3
    assert count_classes(3, 2).total == 16


def test_closed_form_small_values():
    assert [closed_form_L3(a) for a in range(4)] == [1, 5, 16, 39]
    assert [tight_count_L3(a) for a in range(4)] == [1, 3, 7, 12]


@pytest.mark.parametrize("a", range(7))
def test_three_vertex_closed_forms_match_enumeration(a):
    ec = count_classes(3, a)
    assert ec.total == closed_form_L3(a)
    assert ec.residue_tight == tight_count_L3(a)


def test_residue_definitions_by_direct_enumeration():
    # recount the residues straight off the vectors
    n, a = 3, 3
    full = (1 << n) - 1
    vecs = list(enumerate_vectors(n, a))
    ec = count_classes(n, a)
    assert len(vecs) == ec.total
    fe = [v for v in vecs if v.get(full) == 0]
    assert len(fe) == ec.residue_full_empty
    tight = [v for v in fe if any(v.get(1 << i) == 0 for i in range(n))]
    assert len(tight) == ec.residue_tight


@pytest.mark.parametrize("n", [2, 3, 4])
def test_descent_recursions(n):
    for a in range(1, 7):
        cur = count_classes(n, a)
        prev = count_classes(n, a - 1)
        assert cur.total == prev.total + cur.residue_full_empty
        assert cur.residue_full_empty == prev.residue_full_empty + cur.residue_tight


def test_enumeration_matches_dp_counts():
    for (n, a) in [(2, 5), (3, 4), (4, 2)]:
        assert sum(1 for _ in enumerate_vectors(n, a)) == count_classes(n, a).total


def test_enumerated_vectors_have_exact_row_sums():
    for v in enumerate_vectors(3, 3):
        assert all(list_size(v, i) == 3 for i in range(1, 4))


def test_budget_guard():
    with pytest.raises(BudgetError):
        count_classes(5, 3)
    with pytest.raises(BudgetError):
        count_classes(4, 40)


def test_degree_fit_two_vertices():
    report = degree_fit(2, 6)
    assert report.degree == 1
    assert report.coefficients == (Fraction(1), Fraction(1))  # a + 1


def test_degree_fit_three_vertices_documented_range():
    # at a_max = 8 the even subsequence already shows constant 4th differences
    report = degree_fit(3, 8)
    assert report.degree is None  # raw sequence is only parity-polynomial
    assert report.even is not None and report.even.degree == 4


def test_degree_fit_three_vertices_parity_coefficients():
    # one more point gives both parities five values: exact quartics
    report = degree_fit(3, 9)
    assert report.even is not None and report.even.degree == 4
    assert report.odd is not None and report.odd.degree == 4
    # even branch equals the closed form without the parity correction
    expected = (
        Fraction(1),
        Fraction(2),
        Fraction(3, 2),
        Fraction(1, 2),
        Fraction(1, 16),
    )
    assert report.even.coefficients == expected
    # the odd branch is the same polynomial minus 1/16
    assert report.odd.coefficients[0] == Fraction(15, 16)
    assert report.odd.coefficients[1:] == expected[1:]


def test_degree_fit_four_vertices_report_only():
    report = degree_fit(4, 7)
    # expected one degree higher than the three-vertex case; reported, not asserted
    degrees = {report.degree}
    if report.even is not None:
        degrees.add(report.even.degree)
    assert degrees - {None}, "no fit found at all"


def test_degree_fit_requires_room():
    with pytest.raises(DomainError):
        degree_fit(3, 4)


def test_fit_polynomials_reproduce_values():
    report = degree_fit(2, 8)
    for a, value in enumerate(report.values):
        total = sum(c * a**k for k, c in enumerate(report.coefficients))
        assert total == value
    report3 = degree_fit(3, 9)
    for a, value in enumerate(report3.values):
        branch = report3.even if a % 2 == 0 else report3.odd
        total = sum(c * a**k for k, c in enumerate(branch.coefficients))
        assert total == value
