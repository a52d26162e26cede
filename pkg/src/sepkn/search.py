"""Exact separation numbers via exhaustive counter-example search.

A counter-example for ``(n, a, b, c)`` is a block-size vector with every
per-vertex sum equal to ``a``, every pairwise sum at most ``c`` and total
mass below ``n*b`` -- an assignment whose lists are a-uniform and
c-separating but whose full union is too small for a b-set coloring.
Restricting a violating assignment to its violating subset gives a
violating assignment of a smaller complete graph, and padding with fresh
disjoint lists lifts it back, so the separation number of K_n is decided
by searching all orders ``m <= n``.

The search is depth-first over block sizes in canonical subset order with
ascending values, so the first solution found is the lexicographically
least one; results are deterministic and reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import BudgetError, DomainError
from .setsys import PIVector, subsets_canonical

_INF_SIZE = 10**6


@lru_cache(maxsize=None)
def _tables(n: int):
    """Static per-order tables: members, pair slots, suffix size minima."""
    subsets = subsets_canonical(n)
    pair_index: dict[tuple[int, int], int] = {}
    for i in range(n):
        for j in range(i + 1, n):
            pair_index[(i, j)] = len(pair_index)
    members: list[tuple[int, ...]] = []
    pair_ids: list[tuple[int, ...]] = []
    for mask in subsets:
        vs = tuple(i for i in range(n) if (mask >> i) & 1)
        members.append(vs)
        pair_ids.append(
            tuple(
                pair_index[(vs[x], vs[y])]
                for x in range(len(vs))
                for y in range(x + 1, len(vs))
            )
        )
    L = len(subsets)
    # min size of a suffix subset containing each vertex
    minsize = [[_INF_SIZE] * n for _ in range(L + 1)]
    for t in range(L - 1, -1, -1):
        row = list(minsize[t + 1])
        sz = subsets[t].bit_count()
        for i in members[t]:
            if sz < row[i]:
                row[i] = sz
        minsize[t] = row
    # vertices whose last containing subset sits at position t
    last: dict[int, int] = {}
    for t, vs in enumerate(members):
        for i in vs:
            last[i] = t
    forced: list[list[int]] = [[] for _ in range(L)]
    for i, t in last.items():
        forced[t].append(i)
    return (
        subsets,
        tuple(members),
        tuple(pair_ids),
        len(pair_index),
        tuple(tuple(r) for r in minsize),
        tuple(tuple(sorted(f)) for f in forced),
    )


def _union_lower_bound(n: int, a: int, c: int) -> int:
    """Provable union size of n a-lists pairwise intersecting in <= c colors.

    Adding the lists one by one, the (j+1)-th contributes at least
    ``a - j*c`` fresh colors.
    """
    return sum(max(a - j * c, 0) for j in range(n))


def find_counterexample(
    n: int, a: int, b: int, c: int, *, symmetry: bool = True, max_n: int = 5
) -> PIVector | None:
    """Least (lex) violating block vector for (n, a, b, c), or None.

    Depth-first branch and bound over block sizes in canonical subset
    order.  Pruning: per-vertex and per-pair caps, total-mass cap, a
    global packing bound on how cheaply the remaining vertex deficits can
    be covered within the remaining pair slack, and per-vertex pair-slack
    bounds.  With ``symmetry`` the singleton block is forced nondecreasing
    (the lexicographic leader of every solution orbit has it), which only
    skips subtrees that cannot contain the first solution.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not 1 <= b <= a:
        raise DomainError(f"need 1 <= b <= a, got a={a}, b={b}")
    if not 0 <= c <= a:
        raise DomainError(f"need 0 <= c <= a, got c={c}")
    if n > max_n:
        raise BudgetError(f"search limited to n <= {max_n}, got n={n}")
    if _union_lower_bound(n, a, c) >= n * b:
        return None
    if n == 1:
        return None  # single list always has a >= b colors

    subsets, members, pair_ids, npairs, minsize, forced = _tables(n)
    L = len(subsets)
    limit_total = n * b - 1
    total_pair_slack = c * npairs

    persum = [0] * n
    psum_v = [0] * n  # per-vertex sum of incident pair sums
    pairsum = [0] * npairs
    x = [0] * L
    state = {"total": 0, "tp": 0, "D": n * a}
    solution: list[int] | None = None

    def suffix_ok(t: int) -> bool:
        D = state["D"]
        if D == 0:
            return True
        if t == L:
            return False
        slack = limit_total - state["total"]
        if slack <= 0:
            return False
        k = subsets[t].bit_count()
        u_min = -(-D // n)
        u_cap = min(slack, D // k)
        if u_min > u_cap:
            return False
        q, r = divmod(D, u_cap)
        min_cost = (u_cap - r) * (q * (q - 1) // 2) + r * (q * (q + 1) // 2)
        if min_cost > total_pair_slack - state["tp"]:
            return False
        row = minsize[t]
        for i in range(n):
            d = a - persum[i]
            if d:
                ks = row[i]
                if ks >= _INF_SIZE or d > slack:
                    return False
                if ks >= 2 and d * (ks - 1) > c * (n - 1) - psum_v[i]:
                    return False
        return True

    def walk(t: int) -> bool:
        nonlocal solution
        if state["D"] == 0:
            solution = x[:t] + [0] * (L - t)
            return True
        if t == L:
            return False
        mem = members[t]
        pp = pair_ids[t]
        deg = len(mem) - 1
        cap = limit_total - state["total"]
        for i in mem:
            d = a - persum[i]
            if d < cap:
                cap = d
        for p in pp:
            s = c - pairsum[p]
            if s < cap:
                cap = s
        if cap < 0:
            return False
        lo = 0
        if symmetry and deg == 0 and t > 0 and len(members[t - 1]) == 1:
            lo = x[t - 1]
        need = forced[t]
        if need:
            req = a - persum[need[0]]
            for i in need[1:]:
                if a - persum[i] != req:
                    return False
            if req < lo or req > cap:
                return False
            values = (req,)
        else:
            values = range(lo, cap + 1)
        for val in values:
            x[t] = val
            if val:
                for i in mem:
                    persum[i] += val
                    psum_v[i] += val * deg
                for p in pp:
                    pairsum[p] += val
                state["total"] += val
                state["tp"] += val * len(pp)
                state["D"] -= val * len(mem)
            ok = suffix_ok(t + 1) and walk(t + 1)
            if val:
                for i in mem:
                    persum[i] -= val
                    psum_v[i] -= val * deg
                for p in pp:
                    pairsum[p] -= val
                state["total"] -= val
                state["tp"] -= val * len(pp)
                state["D"] += val * len(mem)
            if ok:
                x[t] = 0
                return True
        x[t] = 0
        return False

    if suffix_ok(0) and walk(0):
        assert solution is not None
        return PIVector(n, zip(subsets, solution))
    return None


def pad_fresh(v: PIVector, n: int, a: int) -> PIVector:
    """Lift a violating vector to order n with fresh disjoint lists of size a."""
    if n < v.n:
        raise DomainError(f"cannot pad an order-{v.n} vector down to {n}")
    counts = dict(v.items())
    for i in range(v.n + 1, n + 1):
        counts[1 << (i - 1)] = a
    return PIVector(n, counts)


@dataclass(frozen=True)
class SepQuery:
    n: int
    a: int
    b: int

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"separation needs n >= 2, got {self.n}")
        if not 1 <= self.b <= self.a:
            raise DomainError(f"need 1 <= b <= a, got a={self.a}, b={self.b}")


@dataclass
class SepResult:
    query: SepQuery
    value: int
    counterexample: PIVector | None
    certificate_kind: str
    exact: bool = True

    def to_json(self) -> dict:
        return {
            "n": self.query.n,
            "a": self.query.a,
            "b": self.query.b,
            "value": self.value,
            "counterexample": None
            if self.counterexample is None
            else self.counterexample.to_json(),
            "certificate_kind": self.certificate_kind,
            "exact": self.exact,
        }


def _least_violating_c(
    m: int, a: int, b: int, hi: int
) -> tuple[int, PIVector] | None:
    """Least c in [0, hi] admitting an order-m violator, with its witness."""
    if hi < 0:
        return None
    vec = find_counterexample(m, a, b, hi)
    if vec is None:
        return None
    lo = 0
    while lo < hi:
        mid = (lo + hi) // 2
        probe = find_counterexample(m, a, b, mid)
        if probe is None:
            lo = mid + 1
        else:
            vec, hi = probe, mid
    return lo, vec


def _least_c_cell(args: tuple[int, int, int]) -> tuple[int, PIVector] | None:
    m, a, b = args
    return _least_violating_c(m, a, b, a)


def sep(q: SepQuery, *, max_m: int | None = None, jobs: int = 1) -> SepResult:
    """Largest c such that K_n is (a, b, c)-choosable.

    When ``a >= n*b`` every subset union already reaches ``|S|*b`` colors
    (any single list does), so the value is ``a`` with no search.
    Otherwise, for each order m from 2 to n, binary-search the least c
    admitting a counter-example of order m; the minimum over m, minus one,
    is the separation number.  A ``max_m`` below n yields only an upper
    bound, flagged via ``exact=False``.  With ``jobs > 1`` the per-order
    searches run in separate processes; ties between orders are broken
    toward the smaller order either way, so the result is identical.
    """
    n, a, b = q.n, q.a, q.b
    if a >= n * b:
        return SepResult(q, a, None, "amplitude-bound")
    if max_m is None:
        if n > 5:
            raise BudgetError("orders above 5 need an explicit max_m budget")
        limit = n
    else:
        limit = min(n, max_m)
    best: tuple[int, PIVector] | None = None
    orders = range(2, limit + 1)
    if jobs > 1 and len(orders) > 1:
        from multiprocessing import Pool

        with Pool(processes=jobs) as pool:
            results = pool.map(_least_c_cell, [(m, a, b) for m in orders])
        for found in results:
            if found is not None and (best is None or found[0] < best[0]):
                best = found
    else:
        for m in orders:
            hi = a if best is None else best[0] - 1
            found = _least_violating_c(m, a, b, hi)
            if found is not None:
                best = found
    if best is None:
        return SepResult(q, a, None, "exhaustive", exact=limit >= n)
    best_c, best_vec = best
    return SepResult(q, best_c - 1, pad_fresh(best_vec, n, a), "exhaustive", exact=limit >= n)


def sep_symmetric(q: SepQuery) -> int:
    """Least separation bound witnessed by fully symmetric vectors, minus one.

    Restricting to vectors that depend only on subset size turns the
    search into n nonnegative unknowns tied by three binomial-weighted
    linear forms; an upper bound on the true separation number.
    """
    n, a, b = q.n, q.a, q.b
    wa = [math.comb(n - 1, i - 1) for i in range(1, n + 1)]
    wc = [math.comb(n - 2, i - 2) if i >= 2 else 0 for i in range(1, n + 1)]
    wamp = [math.comb(n, i) for i in range(1, n + 1)]
    amp_limit = n * b - 1
    best: int | None = None

    def rec(i: int, rem_a: int, pairsum: int, amp: int) -> None:
        nonlocal best
        if best is not None and pairsum >= best:
            return
        if amp > amp_limit:
            return
        if i == n:
            if rem_a == 0:
                best = pairsum
            return
        top = rem_a // wa[i]
        for xi in range(top + 1):
            rec(i + 1, rem_a - xi * wa[i], pairsum + xi * wc[i], amp + xi * wamp[i])

    rec(0, a, 0, 0)
    return a if best is None else best - 1


@dataclass
class ScanRow:
    n: int
    a: int
    b: int
    p: int
    sep: int
    conjectured: int
    epsilon: int

    @property
    def within_band(self) -> bool:
        return self.epsilon in (-1, 0)


def _scan_cell(args: tuple[int, int, int, int]) -> ScanRow:
    n, a, b, p = args
    value = sep(SepQuery(n, a, b)).value
    conjectured = -((-(2 * p * a - p * (p + 1) * b)) // (n - 1))
    return ScanRow(n, a, b, p, value, conjectured, value - conjectured)


def conjecture_scan(
    n: int, a_max: int, b_max: int, *, jobs: int = 1
) -> list[ScanRow]:
    """Exact separation numbers versus the mid-range prediction.

    Covers all (a, b, p) with ``p*b <= a < (p+1)*b`` and ``2 <= p <= n-2``
    inside the given bounds.  Purely a report: rows falling outside the
    predicted band {-1, 0} are findings, never errors.
    """
    if n < 4:
        raise DomainError("the mid-range prediction needs n >= 4")
    cells = []
    for b in range(1, b_max + 1):
        for p in range(2, n - 1):
            for a in range(p * b, min((p + 1) * b - 1, a_max) + 1):
                cells.append((n, a, b, p))
    cells.sort(key=lambda t: (t[2], t[1], t[3]))
    if jobs > 1 and len(cells) > 1:
        from multiprocessing import Pool

        with Pool(processes=jobs) as pool:
            rows = pool.map(_scan_cell, cells)
    else:
        rows = [_scan_cell(cell) for cell in cells]
    return rows
