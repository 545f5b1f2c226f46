"""Partitions, bipartitions, and semi-infinite wedge index sets.

A partition is a plain tuple of weakly decreasing positive integers;
parts beyond the stored length read as zero.  An index set encodes one
semi-infinite wedge factor: the strictly decreasing integer sequence
``i_k = part_k + offset - k``, which settles onto the arithmetic tail
``offset - k`` as soon as the parts run out.  Only the displaced prefix
(entries off the tail) is stored, so the representation is unique and
O(number of parts).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Iterable, Iterator


class PartitionError(ValueError):
    """A sequence that does not define a partition or index set."""


class BipartitionParseError(PartitionError):
    """Malformed bipartition text; carries the offending character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def as_partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Validate and canonicalize a weakly decreasing tuple of positive parts."""
    out = tuple(parts)
    for k, p in enumerate(out):
        if not isinstance(p, int) or isinstance(p, bool):
            raise PartitionError(f"part {k + 1} is not an integer: {p!r}")
        if p <= 0:
            raise PartitionError(f"part {k + 1} must be positive, got {p}")
        if k and out[k - 1] < p:
            raise PartitionError(f"parts must be weakly decreasing, got {out[k-1]} < {p}")
    return out


def part(parts: tuple[int, ...], k: int) -> int:
    """The k-th part, 1-based; zero beyond the stored length."""
    return parts[k - 1] if 1 <= k <= len(parts) else 0


def conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Transpose of the Young diagram."""
    if not parts:
        return ()
    cols = [0] * parts[0]
    for p in parts:
        for i in range(p):
            cols[i] += 1
    return tuple(cols)


def contains(inner: tuple[int, ...], outer: tuple[int, ...]) -> bool:
    """Whether the diagram of `inner` fits inside the diagram of `outer` rowwise."""
    return all(part(outer, k + 1) >= p for k, p in enumerate(inner))


@total_ordering
@dataclass(frozen=True)
class Bipartition:
    """An ordered pair of partitions: (black, white)."""

    black: tuple[int, ...]
    white: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.black) + sum(self.white)

    def sort_key(self):
        # Total size first, then black-major: larger blacks come earlier, so the
        # singleton-black bipartition precedes the singleton-white one of equal size.
        return (self.total, tuple(-p for p in self.black) + (1,), self.white)

    def __lt__(self, other: "Bipartition") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return format_bipartition(self)


def format_bipartition(bp: Bipartition) -> str:
    return ",".join(map(str, bp.black)) + "|" + ",".join(map(str, bp.white))


def _parse_side(text: str, start: int) -> tuple[int, ...]:
    if text == "":
        return ()
    parts = []
    pos = start
    for chunk in text.split(","):
        if not chunk or not chunk.isdigit():
            raise BipartitionParseError(f"expected a positive integer, got {chunk!r}", pos)
        value = int(chunk)
        if value <= 0:
            raise BipartitionParseError(f"parts must be positive, got {value}", pos)
        if parts and parts[-1] < value:
            raise BipartitionParseError(
                f"parts must be weakly decreasing, got {parts[-1]} before {value}", pos
            )
        parts.append(value)
        pos += len(chunk) + 1
    return tuple(parts)


def parse_bipartition(text: str) -> Bipartition:
    """Parse `"p1,p2,...|q1,q2,..."`; an empty side denotes the empty partition."""
    if text.count("|") != 1:
        raise BipartitionParseError("expected exactly one '|' separator", text.find("|"))
    left, right = text.split("|")
    return Bipartition(_parse_side(left, 0), _parse_side(right, len(left) + 1))


def is_cross(bp: Bipartition, m: int, n: int) -> bool:
    """Whether some 0 <= k <= m has black_{k+1} + conj(white)_{m-k+1} <= n."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    wt = conjugate(bp.white)
    return any(part(bp.black, k + 1) + part(wt, m - k + 1) <= n for k in range(m + 1))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n, largest first part first (descending lex)."""
    if n == 0:
        yield ()
        return
    cap = n if max_part is None else min(max_part, n)
    for first in range(cap, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_upto(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.chain.from_iterable(partitions_of(k) for k in range(n + 1)))


def enumerate_bipartitions(max_total: int) -> list[Bipartition]:
    """All bipartitions with total size <= max_total, in the canonical order."""
    out: list[Bipartition] = []
    for total in range(max_total + 1):
        batch = [
            Bipartition(black, white)
            for bsize in range(total + 1)
            for black in partitions_of(bsize)
            for white in partitions_of(total - bsize)
        ]
        batch.sort()
        out.extend(batch)
    return out


@dataclass(frozen=True)
class IndexSet:
    """Strictly decreasing integers with eventual tail ``offset - k``.

    ``displaced`` holds exactly the entries coming from positive parts, so
    every stored entry exceeds its tail value and the representation is
    canonical.  Membership below ``tail_start`` is implicit.
    """

    displaced: tuple[int, ...]
    offset: int

    @classmethod
    def from_partition(cls, parts: tuple[int, ...], offset: int) -> "IndexSet":
        return cls(tuple(p + offset - k for k, p in enumerate(parts, start=1)), offset)

    @property
    def tail_start(self) -> int:
        """Largest index of the pure tail; everything at or below it is a member."""
        return self.offset - len(self.displaced) - 1

    def member(self, i: int) -> bool:
        return i <= self.tail_start or i in self.displaced

    def entry(self, k: int) -> int:
        """The k-th entry (1-based) of the full decreasing sequence."""
        if k <= 0:
            raise IndexError("entries are 1-based")
        if k <= len(self.displaced):
            return self.displaced[k - 1]
        return self.offset - k

    def max_index(self) -> int:
        return self.entry(1)

    def count_greater(self, x: int) -> int:
        """Number of members strictly greater than x."""
        n = sum(1 for i in self.displaced if i > x)
        if self.tail_start > x:
            n += self.tail_start - x
        return n

    def to_partition(self) -> tuple[int, ...]:
        return tuple(i - self.offset + k for k, i in enumerate(self.displaced, start=1))


def u_index_set(white: tuple[int, ...]) -> IndexSet:
    """Index set of the plain wedge factor: entries part_k - k, tail offset 0."""
    return IndexSet.from_partition(white, 0)


def w_index_set(black: tuple[int, ...], t: int) -> IndexSet:
    """Index set of the dual wedge factor: entries part_k + t - k, tail offset t."""
    return IndexSet.from_partition(black, t)


def from_index_set(entries: Iterable[int], offset: int) -> tuple[int, ...]:
    """Reconstruct the partition from a displaced prefix, validating it.

    Accepts trailing tail-coincident entries (they normalize away); rejects
    prefixes that are not strictly decreasing, dip below the tail bound
    ``offset - k``, or leave a gap before the implicit tail.
    """
    seq = tuple(entries)
    parts = []
    for k, i in enumerate(seq, start=1):
        if k > 1 and seq[k - 2] <= i:
            raise PartitionError(f"entries must be strictly decreasing, got {seq[k-2]} then {i}")
        p = i - offset + k
        if p < 0:
            raise PartitionError(f"entry {i} at place {k} lies below the tail bound {offset - k}")
        parts.append(p)
    while parts and parts[-1] == 0:
        parts.pop()
    return as_partition(parts)


def unmatched_indices(a: IndexSet, b: IndexSet) -> tuple[int, ...]:
    """Members of a that are not members of b, in decreasing order (finite)."""
    floor = min(a.tail_start, b.tail_start)
    ceil = max(a.max_index(), b.max_index())
    return tuple(i for i in range(ceil, floor, -1) if a.member(i) and not b.member(i))
