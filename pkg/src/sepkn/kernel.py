"""Exact linear algebra for the symmetric constraint system.

The size-indexed vector of a symmetric assignment meets two linear
constraints: a binomial-weighted row sum fixing the list size and another
fixing the pairwise intersection.  This module builds explicit bases of
the kernel of the first form and of the intersection of both kernels,
verifies orthogonality and rank exactly, and produces the two boundary
solutions whose expansions are the low- and high-range counter-examples.

Everything runs on ``fractions.Fraction``; no floating point anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import DomainError

Vector = tuple[Fraction, ...]


def _frac(entries) -> Vector:
    return tuple(Fraction(e) for e in entries)


def _unit(i: int, n: int) -> Vector:
    return _frac(1 if k == i - 1 else 0 for k in range(n))


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DomainError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum((ui * vi for ui, vi in zip(u, v)), Fraction(0))


def add(u: Vector, v: Vector, scale=1) -> Vector:
    s = Fraction(scale)
    return tuple(ui + s * vi for ui, vi in zip(u, v))


def vec_a(n: int) -> Vector:
    """Row of list-size weights: C(n-1, i-1) at position i."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    return _frac(math.comb(n - 1, i - 1) for i in range(1, n + 1))


def vec_c(n: int) -> Vector:
    """Row of pair-intersection weights: C(n-2, i-2) at position i >= 2."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    return _frac(math.comb(n - 2, i - 2) if i >= 2 else 0 for i in range(1, n + 1))


def vec_psi(n: int) -> Vector:
    """Row of amplitude weights: C(n, i) at position i."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    return _frac(math.comb(n, i) for i in range(1, n + 1))


def antisym(i: int, n: int) -> Vector:
    """e_i - e_{n+1-i}: swaps a size for its complement size."""
    if not 1 <= i <= n // 2:
        raise DomainError(f"antisymmetric index {i} out of range 1..{n // 2}")
    return add(_unit(i, n), _unit(n + 1 - i, n), -1)


def pascal_step(i: int, n: int) -> Vector:
    """e_i + e_{i-1} - C(n, i-1) e_1: one Pascal identity as a vector."""
    if i < 2:
        raise DomainError(f"pascal index {i} must be >= 2")
    v = add(_unit(i, n), _unit(i - 1, n))
    return add(v, _unit(1, n), -math.comb(n, i - 1))


def binomial_kernel_vector(n: int) -> Vector:
    """sum_i e_i - 2^(n-1) e_1: kills the full binomial row sum."""
    ones = _frac([1] * n)
    return add(ones, _unit(1, n), -(2 ** (n - 1)))


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank by Gaussian elimination over the rationals."""
    m = [list(map(Fraction, row)) for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((k for k in range(r, len(m)) if m[k][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [v * inv for v in m[r]]
        for k in range(len(m)):
            if k != r and m[k][col] != 0:
                f = m[k][col]
                m[k] = [vk - f * vr for vk, vr in zip(m[k], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def _pascal_indices(n: int) -> list[int]:
    """Pascal-step indices 3..ceil(n/2), top one bumped when n = 2 mod 4.

    With the plain range the family below is dependent for n = 2 (mod 4):
    at n = 6, for instance, bn = -as(1) - as(2) - as(3) + 2 tp(3).  Any
    Pascal step lies in the kernel, so raising the top index restores
    independence without losing membership.
    """
    tops = list(range(3, (n + 1) // 2 + 1))
    if n % 4 == 2:
        tops[-1] += 1  # n >= 6 here, so the range is never empty
    return tops


def basis_ker_a(n: int) -> list[Vector]:
    """Explicit basis of the kernel of the list-size form, dimension n-1.

    Antisymmetric swaps for i up to n//2, Pascal steps, and the binomial
    kernel vector.  Membership, cardinality and rank are verified exactly;
    a violation raises.
    """
    if n < 3:
        raise DomainError(f"need n >= 3, got {n}")
    family = [antisym(i, n) for i in range(1, n // 2 + 1)]
    family += [pascal_step(i, n) for i in _pascal_indices(n)]
    family.append(binomial_kernel_vector(n))
    row_a = vec_a(n)
    for v in family:
        if dot(row_a, v) != 0:
            raise RuntimeError(f"basis vector {v} escapes the kernel at n={n}")
    if len(family) != n - 1 or rank(family) != n - 1:
        raise RuntimeError(
            f"kernel family has size {len(family)}, rank {rank(family)}; expected {n - 1}"
        )
    return family


def basis_ker_ac(n: int) -> list[Vector]:
    """Basis of the intersection of both kernels, dimension n-2.

    Each generator is the matching ker-a generator corrected by a multiple
    of the first antisymmetric swap (whose pair-form value is -1).
    """
    if n < 4:
        raise DomainError(f"need n >= 4, got {n}")
    as1 = antisym(1, n)
    family: list[Vector] = []
    for i in range(2, n // 2 + 1):
        delta = math.comb(n - 2, i - 2) - math.comb(n - 2, n - 1 - i)
        family.append(add(antisym(i, n), as1, delta))
    for i in _pascal_indices(n):
        family.append(add(pascal_step(i, n), as1, math.comb(n - 1, i - 2)))
    family.append(add(binomial_kernel_vector(n), as1, 2 ** (n - 2)))
    row_a, row_c = vec_a(n), vec_c(n)
    for v in family:
        if dot(row_a, v) != 0 or dot(row_c, v) != 0:
            raise RuntimeError(f"vector {v} escapes the kernel intersection at n={n}")
    if len(family) != n - 2 or rank(family) != n - 2:
        raise RuntimeError(
            f"intersection family has size {len(family)}, rank {rank(family)}; "
            f"expected {n - 2}"
        )
    return family


def extreme_points(n: int, a: int, c: int) -> tuple[Vector | None, Vector | None]:
    """The two boundary solutions of {list size = a, pair size = c}.

    ``x1 = (a - (n-1)c) e_1 + c e_2`` exists when ``a >= (n-1)c``;
    ``x2 = (a - c) e_{n-1} + ((n-1)c - (n-2)a) e_n`` when
    ``(n-2)a <= (n-1)c`` and ``c <= a``.  Expanded to full subset vectors
    they are the low- and high-range counter-example shapes.
    """
    if n < 3:
        raise DomainError(f"need n >= 3, got {n}")
    if a < 0 or c < 0:
        raise DomainError(f"need a, c >= 0, got a={a}, c={c}")
    x1 = x2 = None
    if a >= (n - 1) * c:
        x1 = add(
            tuple(Fraction(a - (n - 1) * c) * e for e in _unit(1, n)),
            _unit(2, n),
            c,
        )
    if (n - 2) * a <= (n - 1) * c and c <= a:
        x2 = add(
            tuple(Fraction(a - c) * e for e in _unit(n - 1, n)),
            _unit(n, n),
            (n - 1) * c - (n - 2) * a,
        )
    for x in (x1, x2):
        if x is not None:
            if dot(vec_a(n), x) != a or dot(vec_c(n), x) != c:
                raise RuntimeError(f"extreme point {x} misses its constraints")
    return x1, x2
