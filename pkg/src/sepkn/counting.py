"""Counting a-list assignments up to proper-intersection equivalence.

Two assignments are equivalent when their block-size vectors coincide, so
counting classes means counting nonnegative lattice points of the n
per-vertex sum equations over the 2^n - 1 subset variables.  Exact counts
come from a dynamic program over the canonical subset order; closed forms
and recursions for small n are verified against it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .errors import BudgetError, DomainError
from .setsys import PIVector, subsets_canonical


def _budget_check(n: int, a: int) -> None:
    if n < 1 or a < 0:
        raise DomainError(f"need n >= 1 and a >= 0, got n={n}, a={a}")
    if n > 4 or (a + 1) ** n > 2_000_000:
        raise BudgetError(f"counting budget exceeded for n={n}, a={a}")


@lru_cache(maxsize=None)
def _lattice_count(n: int, a: int, skip_full: bool, min_singleton: int) -> int:
    """Number of block vectors with all per-vertex sums equal to a.

    ``skip_full`` pins the full-set block to zero; ``min_singleton`` puts a
    floor under every singleton block (used to count the complement of
    "some singleton is empty").
    """
    masks = [m for m in subsets_canonical(n) if not (skip_full and m == (1 << n) - 1)]
    states: dict[tuple[int, ...], int] = {(a,) * n: 1}
    for mask in masks:
        vs = [i for i in range(n) if (mask >> i) & 1]
        lo = min_singleton if len(vs) == 1 else 0
        nxt: dict[tuple[int, ...], int] = {}
        for residual, ways in states.items():
            top = min(residual[i] for i in vs)
            for x in range(lo, top + 1):
                key = tuple(
                    r - x if i in vs else r for i, r in enumerate(residual)
                )
                nxt[key] = nxt.get(key, 0) + ways
        states = nxt
        if not states:
            break
    zero = (0,) * n
    return states.get(zero, 0)


@dataclass(frozen=True)
class EquivClassCount:
    n: int
    a: int
    total: int
    residue_full_empty: int  # classes with an empty full-set block
    residue_tight: int  # of those, classes where some singleton block is empty

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "a": self.a,
            "total": self.total,
            "residue_full_empty": self.residue_full_empty,
            "residue_tight": self.residue_tight,
        }


def count_classes(n: int, a: int) -> EquivClassCount:
    """Exact class counts plus the two residues, self-checked.

    The counts obey two descent recursions (peeling one color off the
    full-set block, or off every singleton block); both are re-verified
    here on every call since the subtractions are cheap.
    """
    _budget_check(n, a)
    total = _lattice_count(n, a, False, 0)
    fe = _lattice_count(n, a, True, 0)
    tight = fe - _lattice_count(n, a, True, 1)
    if a >= 1 and n >= 2:  # for n = 1 the full set IS the singleton
        prev_total = _lattice_count(n, a - 1, False, 0)
        prev_fe = _lattice_count(n, a - 1, True, 0)
        if total != prev_total + fe:
            raise RuntimeError(f"full-set descent recursion broken at n={n}, a={a}")
        if fe != prev_fe + tight:
            raise RuntimeError(f"singleton descent recursion broken at n={n}, a={a}")
    return EquivClassCount(n, a, total, fe, tight)


def enumerate_vectors(n: int, a: int) -> Iterator[PIVector]:
    """All block vectors with every per-vertex sum equal to a, canonical order."""
    _budget_check(n, a)
    masks = subsets_canonical(n)
    member_bits = [[i for i in range(n) if (m >> i) & 1] for m in masks]
    values = [0] * len(masks)
    residual = [a] * n

    def rec(t: int) -> Iterator[PIVector]:
        if t == len(masks):
            if all(r == 0 for r in residual):
                yield PIVector(n, zip(masks, values))
            return
        vs = member_bits[t]
        top = min(residual[i] for i in vs)
        # the full set is the last chance for every vertex
        if t == len(masks) - 1:
            req = residual[0]
            if all(r == req for r in residual):
                candidates: tuple[int, ...] = (req,)
            else:
                candidates = ()
        else:
            candidates = tuple(range(top + 1))
        for x in candidates:
            values[t] = x
            for i in vs:
                residual[i] -= x
            yield from rec(t + 1)
            for i in vs:
                residual[i] += x
            values[t] = 0

    yield from rec(0)


def closed_form_L3(a: int) -> int:
    """Class count on three vertices: quartic quasi-polynomial, exact."""
    if a < 0:
        raise DomainError(f"a must be nonnegative, got {a}")
    eps = 1 if a % 2 else 0
    num = a**4 + 8 * a**3 + 24 * a**2 + 32 * a + 16 - eps
    q, r = divmod(num, 16)
    if r:
        raise RuntimeError(f"closed form not integral at a={a}")
    return q


def tight_count_L3(a: int) -> int:
    """Three-vertex classes with empty full block and some empty singleton."""
    if a < 0:
        raise DomainError(f"a must be nonnegative, got {a}")
    num = 3 * a * a + 6 * a + (4 if a % 2 == 0 else 3)
    q, r = divmod(num, 4)
    if r:
        raise RuntimeError(f"closed form not integral at a={a}")
    return q


# -- exact polynomial fitting ------------------------------------------------


def _difference_table(values: list[int]) -> list[list[int]]:
    table = [list(values)]
    while len(table[-1]) > 1:
        prev = table[-1]
        table.append([prev[i + 1] - prev[i] for i in range(len(prev) - 1)])
    return table


def _constant_level(table: list[list[int]], min_witness: int = 2) -> int | None:
    """Least level whose entries are all equal, with at least min_witness of them."""
    for d, row in enumerate(table):
        if len(row) >= min_witness and len(set(row)) == 1:
            return d
    return None


def _poly_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        for j, qj in enumerate(q):
            out[i + j] += pi * qj
    return out


def _newton_coefficients(deltas: list[int]) -> list[Fraction]:
    """Monomial coefficients of sum_k deltas[k] * C(t, k)."""
    coeffs = [Fraction(0)] * len(deltas)
    basis = [Fraction(1)]  # C(t, 0)
    for k, dk in enumerate(deltas):
        for i, bi in enumerate(basis):
            coeffs[i] += dk * bi
        # C(t, k+1) = C(t, k) * (t - k) / (k + 1)
        basis = _poly_mul(basis, [Fraction(-k, k + 1), Fraction(1, k + 1)])
    return coeffs


def _compose_linear(p: list[Fraction], shift: Fraction, scale: Fraction) -> list[Fraction]:
    """Coefficients of p(scale * a + shift) in the variable a."""
    out = [Fraction(0)]
    for coeff in reversed(p):
        out = _poly_mul(out, [shift, scale])
        out[0] += coeff
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _fit_exact(
    values: list[int], min_witness: int = 2
) -> tuple[int, tuple[Fraction, ...], int] | None:
    table = _difference_table(values)
    d = _constant_level(table, min_witness)
    if d is None:
        return None
    deltas = [table[k][0] for k in range(d + 1)]
    coeffs = _newton_coefficients(deltas)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return d, tuple(coeffs), len(table[d])


@dataclass(frozen=True)
class ParityFit:
    degree: int
    coefficients: tuple[Fraction, ...]  # ascending powers of a
    witnesses: int  # entries in the constant difference row; 1 = bare interpolation


@dataclass(frozen=True)
class FitReport:
    n: int
    a_max: int
    values: tuple[int, ...]
    degree: int | None
    coefficients: tuple[Fraction, ...] | None
    even: ParityFit | None
    odd: ParityFit | None

    def to_json(self) -> dict:
        def cc(coeffs):
            return None if coeffs is None else [str(c) for c in coeffs]

        def parity(p):
            if p is None:
                return None
            return {
                "degree": p.degree,
                "coefficients": cc(p.coefficients),
                "witnesses": p.witnesses,
            }

        return {
            "n": self.n,
            "a_max": self.a_max,
            "values": list(self.values),
            "degree": self.degree,
            "coefficients": cc(self.coefficients),
            "even": parity(self.even),
            "odd": parity(self.odd),
        }


def degree_fit(n: int, a_max: int) -> FitReport:
    """Finite-difference degree probe of the class-count sequence.

    Reports the least difference level that goes constant (at least two
    equal entries), with exact rational coefficients recovered from the
    Newton form.  When the raw sequence is only parity-wise polynomial,
    the even and odd subsequences are fitted separately, coefficients
    expressed in a itself.  Parity rows are accepted down to a single
    witness; ``witnesses`` says how much redundancy backed the fit (1
    means bare interpolation, so the degree is only an upper hint there).
    Purely descriptive; no claim beyond the computed range.
    """
    if a_max < n + 3:
        raise DomainError(f"need a_max >= n + 3 = {n + 3} for a meaningful fit")
    values = [count_classes(n, alpha).total for alpha in range(a_max + 1)]
    raw = _fit_exact(values)
    even = odd = None
    if raw is None:
        even_fit = _fit_exact(values[0::2], min_witness=1)
        if even_fit is not None:
            d, coeffs, wit = even_fit
            even = ParityFit(
                d, tuple(_compose_linear(list(coeffs), Fraction(0), Fraction(1, 2))), wit
            )
        odd_fit = _fit_exact(values[1::2], min_witness=1)
        if odd_fit is not None:
            d, coeffs, wit = odd_fit
            odd = ParityFit(
                d, tuple(_compose_linear(list(coeffs), Fraction(-1, 2), Fraction(1, 2))), wit
            )
    if raw is None:
        degree, coefficients = None, None
    else:
        degree, coefficients, _ = raw
    return FitReport(
        n,
        a_max,
        tuple(values),
        degree,
        coefficients,
        even,
        odd,
    )
