"""Deciding (L,b)-colorability of complete graphs.

On a complete graph every color class is a single vertex, so the Hall-type
*amplitude condition* -- every vertex subset S must see at least ``b*|S|``
distinct colors across its lists -- is necessary and sufficient.  The fast
path checks it straight off a :class:`~sepkn.setsys.PIVector`; the slow
path is an independent exhaustive backtracking oracle over actual color
sets, kept around to cross-validate the fast path at small sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetError, DomainError
from .setsys import (
    ListAssignment,
    PIVector,
    amplitude_mask,
    pi_vector,
    subsets_canonical,
    vertices_of,
)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a colorability check.

    ``witness`` is a full per-vertex coloring (only the exhaustive oracle
    produces one); ``violating_subset`` with its ``amplitude`` certifies a
    negative answer.  Amplitude-only positive verdicts carry neither.
    """

    colorable: bool
    witness: tuple[frozenset[int], ...] | None = None
    violating_subset: tuple[int, ...] | None = None
    amplitude: int | None = None

    def to_json(self) -> dict:
        return {
            "colorable": self.colorable,
            "witness": None if self.witness is None else [sorted(w) for w in self.witness],
            "violating_subset": None
            if self.violating_subset is None
            else list(self.violating_subset),
            "amplitude": self.amplitude,
        }


def amplitude_ok(v: PIVector, b: int) -> Verdict:
    """Check the amplitude condition for every nonempty vertex subset.

    Subsets are scanned in canonical order (size first), so a negative
    verdict names a violating subset of minimum cardinality, ties broken
    canonically.
    """
    if b < 1:
        raise DomainError(f"b must be >= 1, got {b}")
    for mask in subsets_canonical(v.n):
        amp = amplitude_mask(v, mask)
        if amp < b * mask.bit_count():
            return Verdict(False, violating_subset=vertices_of(mask), amplitude=amp)
    return Verdict(True)


def brute_force_color(
    L: ListAssignment, b: int, *, max_n: int = 6, max_colors: int = 24
) -> Verdict:
    """Exhaustive search for pairwise-disjoint b-subsets of the lists.

    Independent of the amplitude machinery: works on raw color sets with
    plain backtracking.  Guarded because the search space is exponential.
    """
    if b < 1:
        raise DomainError(f"b must be >= 1, got {b}")
    if L.n > max_n:
        raise BudgetError(f"brute force limited to n <= {max_n}, got n={L.n}")
    universe = L.union()
    if len(universe) > max_colors:
        raise BudgetError(
            f"brute force limited to {max_colors} colors, got {len(universe)}"
        )

    order = sorted(range(L.n), key=lambda i: (len(L.lists[i]), i))
    assigned: list[frozenset[int] | None] = [None] * L.n
    used: set[int] = set()

    def walk(k: int) -> bool:
        if k == L.n:
            return True
        i = order[k]
        pool = sorted(L.lists[i] - used)
        if len(pool) < b:
            return False
        for combo in combinations(pool, b):
            assigned[i] = frozenset(combo)
            used.update(combo)
            if walk(k + 1):
                return True
            used.difference_update(combo)
        assigned[i] = None
        return False

    if walk(0):
        witness = tuple(w for w in assigned if w is not None)
        return Verdict(True, witness=witness)
    return Verdict(False)


def check_coloring(L: ListAssignment, b: int, coloring: tuple[frozenset[int], ...]) -> bool:
    """Validate a claimed coloring: b colors per vertex, from the list, disjoint."""
    if len(coloring) != L.n:
        return False
    for i, chosen in enumerate(coloring):
        if len(chosen) != b or not chosen <= L.lists[i]:
            return False
    for x, y in combinations(coloring, 2):
        if x & y:
            return False
    return True


def _pad_with_fresh_vertices(v: PIVector, n: int, a: int) -> PIVector:
    """Lift a vector on m vertices to n by adding disjoint fresh lists of size a."""
    counts = dict(v.items())
    for i in range(v.n + 1, n + 1):
        counts[1 << (i - 1)] = a
    return PIVector(n, counts)


def is_abc_choosable(
    n: int, a: int, b: int, c: int, *, max_m: int | None = None
) -> tuple[bool, PIVector | None]:
    """Does every c-separating a-list assignment of K_n admit a b-set coloring?

    A violating assignment on K_n restricted to its violating subset is a
    violating assignment of a smaller complete graph with the same (a, b),
    and conversely any small one lifts by padding with fresh disjoint
    lists.  So it suffices to search all orders ``m <= n``.  Returns the
    verdict plus a violating vector on n vertices when the answer is no.
    """
    from .search import find_counterexample

    if not 1 <= b <= a:
        raise DomainError(f"need 1 <= b <= a, got a={a}, b={b}")
    if not 0 <= c <= a:
        raise DomainError(f"need 0 <= c <= a, got c={c}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    limit = min(n, 5) if max_m is None else min(n, max_m)
    if n > 5 and max_m is None:
        raise BudgetError("orders above 5 need an explicit max_m budget")
    for m in range(2, limit + 1):
        witness = find_counterexample(m, a, b, c)
        if witness is not None:
            return False, _pad_with_fresh_vertices(witness, n, a)
    return True, None


def pi_check(L: ListAssignment, b: int) -> Verdict:
    """Amplitude verdict computed directly from a raw assignment."""
    return amplitude_ok(pi_vector(L), b)
