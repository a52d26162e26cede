"""Set-system algebra underlying list assignments on complete graphs.

A list assignment gives every vertex ``1..n`` a finite set of integer
colors.  Each color of the universe belongs to the lists of exactly one
subset ``S`` of vertices; the colors sharing the same ``S`` form the
*proper intersection* of ``S``.  These blocks partition the union of all
lists, so list sizes, pairwise intersections and unions all become plain
integer sums over the block-size vector.  That vector (:class:`PIVector`)
is the canonical representation used by every other module.

Subsets are bitmasks: bit ``i-1`` set means vertex ``i`` is in the subset.
The canonical enumeration order is by subset size first, then
lexicographically by the sorted vertex tuple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import DomainError

Mask = int


def mask_of(vertices: Iterable[int]) -> Mask:
    """Bitmask of a vertex collection (vertices are 1-based)."""
    m = 0
    for v in vertices:
        if v < 1:
            raise DomainError(f"vertex {v} out of range (vertices are 1-based)")
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: Mask) -> tuple[int, ...]:
    """Sorted vertex tuple of a bitmask."""
    return tuple(i + 1 for i in range(mask.bit_length()) if (mask >> i) & 1)


@lru_cache(maxsize=None)
def subsets_canonical(n: int) -> tuple[Mask, ...]:
    """All nonempty subsets of [1..n], size-ascending then lexicographic."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    masks = range(1, 1 << n)
    return tuple(sorted(masks, key=lambda m: (m.bit_count(), vertices_of(m))))


@dataclass(frozen=True)
class ListAssignment:
    """Color lists for the vertices of a complete graph.

    ``lists[i]`` is the color set of vertex ``i+1``.  Colors are arbitrary
    nonnegative integers; nothing requires the lists to share a palette.
    """

    n: int
    lists: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, lists: Iterable[Iterable[int]]) -> "ListAssignment":
        frozen = tuple(frozenset(l) for l in lists)
        if not frozen:
            raise DomainError("a list assignment needs at least one vertex")
        for fs in frozen:
            for color in fs:
                if not isinstance(color, int) or color < 0:
                    raise DomainError(f"colors must be nonnegative integers, got {color!r}")
        return cls(len(frozen), frozen)

    def union(self) -> frozenset[int]:
        return frozenset().union(*self.lists)

    def is_uniform(self, a: int | None = None) -> bool:
        sizes = {len(l) for l in self.lists}
        if len(sizes) != 1:
            return False
        return a is None or sizes == {a}

    def to_json(self) -> dict:
        return {"n": self.n, "lists": [sorted(l) for l in self.lists]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "ListAssignment":
        try:
            lists = obj["lists"]
            n = obj.get("n", len(lists))
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed list-assignment record: {exc}") from exc
        la = cls.of(lists)
        if la.n != n:
            raise DomainError(f"declared n={n} but {la.n} lists given")
        return la


class PIVector:
    """Vector of proper-intersection sizes over the nonempty subsets of [1..n].

    Zero entries are dropped from the internal mapping; two vectors are
    equal when they agree on every subset.
    """

    __slots__ = ("n", "_counts")

    def __init__(self, n: int, counts: Mapping[Mask, int] | Iterable[tuple[Mask, int]]):
        if n < 1:
            raise DomainError(f"n must be >= 1, got {n}")
        full = (1 << n) - 1
        items = counts.items() if isinstance(counts, Mapping) else counts
        clean: dict[Mask, int] = {}
        for mask, size in items:
            if not 1 <= mask <= full:
                raise DomainError(f"subset mask {mask} out of range for n={n}")
            if size < 0:
                raise DomainError(f"negative block size {size} for subset {vertices_of(mask)}")
            if size:
                clean[mask] = clean.get(mask, 0) + size
        self.n = n
        self._counts = clean

    def get(self, mask: Mask) -> int:
        return self._counts.get(mask, 0)

    def items(self) -> Iterator[tuple[Mask, int]]:
        """Nonzero entries in canonical subset order."""
        for mask in subsets_canonical(self.n):
            size = self._counts.get(mask, 0)
            if size:
                yield mask, size

    def total(self) -> int:
        return sum(self._counts.values())

    def dense(self) -> tuple[int, ...]:
        """All ``2^n - 1`` entries in canonical subset order."""
        return tuple(self._counts.get(m, 0) for m in subsets_canonical(self.n))

    @classmethod
    def from_dense(cls, n: int, values: Iterable[int]) -> "PIVector":
        vals = tuple(values)
        masks = subsets_canonical(n)
        if len(vals) != len(masks):
            raise DomainError(f"expected {len(masks)} entries for n={n}, got {len(vals)}")
        return cls(n, zip(masks, vals))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PIVector):
            return NotImplemented
        return self.n == other.n and self._counts == other._counts

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self._counts.items()))))

    def __repr__(self) -> str:
        inner = ", ".join(f"{vertices_of(m)}:{s}" for m, s in self.items())
        return f"PIVector(n={self.n}, {{{inner}}})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "counts": [
                {"subset": list(vertices_of(m)), "size": s} for m, s in self.items()
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "PIVector":
        try:
            n = obj["n"]
            entries = obj["counts"]
            pairs = [(mask_of(e["subset"]), int(e["size"])) for e in entries]
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed vector record: {exc}") from exc
        return cls(n, pairs)


def proper_intersections(L: ListAssignment) -> dict[Mask, frozenset[int]]:
    """Partition the color universe by list membership.

    The block of subset ``S`` holds the colors appearing in every list of
    ``S`` and in no other list.  Blocks are pairwise disjoint and cover the
    union of all lists; every canonical subset appears as a key, possibly
    with an empty block.
    """
    grouped: dict[Mask, set[int]] = {}
    # membership masks: one pass over the universe
    owner: dict[int, Mask] = {}
    for i, colors in enumerate(L.lists):
        bit = 1 << i
        for color in colors:
            owner[color] = owner.get(color, 0) | bit
    for color, mask in owner.items():
        grouped.setdefault(mask, set()).add(color)
    return {
        mask: frozenset(grouped.get(mask, ()))
        for mask in subsets_canonical(L.n)
    }


def pi_vector(L: ListAssignment) -> PIVector:
    """Block-size vector of an assignment."""
    owner: dict[int, Mask] = {}
    for i, colors in enumerate(L.lists):
        bit = 1 << i
        for color in colors:
            owner[color] = owner.get(color, 0) | bit
    counts: dict[Mask, int] = {}
    for mask in owner.values():
        counts[mask] = counts.get(mask, 0) + 1
    return PIVector(L.n, counts)


def realize(v: PIVector, color_base: int = 1) -> ListAssignment:
    """Canonical assignment with the given block-size vector.

    Blocks receive runs of consecutive fresh colors starting at
    ``color_base``, allocated in canonical subset order, so the result is
    deterministic and ``pi_vector(realize(v)) == v``.
    """
    if color_base < 0:
        raise DomainError("color_base must be nonnegative")
    lists: list[set[int]] = [set() for _ in range(v.n)]
    next_color = color_base
    for mask, size in v.items():
        block = range(next_color, next_color + size)
        next_color += size
        for i in range(v.n):
            if (mask >> i) & 1:
                lists[i].update(block)
    return ListAssignment(v.n, tuple(frozenset(l) for l in lists))


def list_size(v: PIVector, i: int) -> int:
    """Size of the list of vertex ``i``: sum of blocks whose subset contains ``i``."""
    if not 1 <= i <= v.n:
        raise DomainError(f"vertex {i} out of range 1..{v.n}")
    bit = 1 << (i - 1)
    return sum(s for m, s in v._counts.items() if m & bit)


def pair_intersection(v: PIVector, i: int, j: int) -> int:
    """Intersection size of the lists of two distinct vertices."""
    if i == j:
        raise DomainError("pair_intersection needs two distinct vertices")
    for k in (i, j):
        if not 1 <= k <= v.n:
            raise DomainError(f"vertex {k} out of range 1..{v.n}")
    both = (1 << (i - 1)) | (1 << (j - 1))
    return sum(s for m, s in v._counts.items() if (m & both) == both)


def amplitude(v: PIVector, S: Iterable[int]) -> int:
    """Size of the union of the lists indexed by ``S``.

    By the partition property this is the sum of the blocks whose subset
    meets ``S`` -- additions only, no inclusion-exclusion signs.
    """
    mask = mask_of(S)
    if mask == 0:
        raise DomainError("amplitude needs a nonempty vertex subset")
    if mask >= (1 << v.n):
        raise DomainError(f"subset {vertices_of(mask)} out of range for n={v.n}")
    return amplitude_mask(v, mask)


def amplitude_mask(v: PIVector, mask: Mask) -> int:
    return sum(s for m, s in v._counts.items() if m & mask)


def assignment_count(v: PIVector, palette: int | None = None) -> int:
    """Number of distinct assignments realizing ``v`` over a fixed palette.

    Colors are drawn from ``{1..palette}``; blocks are unordered sets, so
    the count is the multinomial ``palette! / ((palette - total)! *
    prod(block!))``.  The default palette is ``n * max list size``.
    """
    if palette is None:
        palette = v.n * max((list_size(v, i) for i in range(1, v.n + 1)), default=0)
    total = v.total()
    if palette < total:
        raise DomainError(f"palette {palette} smaller than total block mass {total}")
    result = math.factorial(palette) // math.factorial(palette - total)
    for _, size in v.items():
        result //= math.factorial(size)
    return result
