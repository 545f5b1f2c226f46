"""Exact rational sparse linear algebra over ordered basis keys.

Vectors are dicts mapping hashable, mutually orderable keys to nonzero
`fractions.Fraction` coefficients.  A `Subspace` keeps a reduced
row-echelon basis, so membership tests and dimension counts are exact and
the stored basis is canonical for a given key order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping

Key = Hashable
Vector = dict


def vec(items: Mapping | Iterable[tuple[Key, object]] = ()) -> Vector:
    """Build a vector, coercing coefficients to Fraction and dropping zeros."""
    out: Vector = {}
    pairs = items.items() if isinstance(items, Mapping) else items
    for k, c in pairs:
        c = Fraction(c)
        if c:
            out[k] = out.get(k, Fraction(0)) + c
            if not out[k]:
                del out[k]
    return out


def vec_add(v: Vector, w: Vector) -> Vector:
    return vec_combine(v, w, Fraction(1))


def vec_scale(c, v: Vector) -> Vector:
    c = Fraction(c)
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vec_combine(v: Vector, w: Vector, c) -> Vector:
    """v + c*w with exact arithmetic; zero coefficients dropped."""
    c = Fraction(c)
    out = dict(v)
    if not c:
        return out
    for k, x in w.items():
        s = out.get(k, Fraction(0)) + c * x
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vec_is_zero(v: Vector) -> bool:
    return not v


class Subspace:
    """Reduced row-echelon span; pivots strictly increasing in key order."""

    def __init__(self):
        self.pivots: list[Key] = []
        self.rows: list[Vector] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def copy(self) -> "Subspace":
        s = Subspace()
        s.pivots = list(self.pivots)
        s.rows = [dict(r) for r in self.rows]
        return s

    def reduce(self, v: Vector) -> Vector:
        """Residual of v after eliminating all pivot keys."""
        out = dict(v)
        for pivot, row in zip(self.pivots, self.rows):
            c = out.get(pivot)
            if c:
                for k, x in row.items():
                    s = out.get(k, Fraction(0)) - c * x
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def contains(self, v: Vector) -> bool:
        return not self.reduce(v)

    def insert(self, v: Vector) -> bool:
        """Add v to the span; returns True when the dimension grew."""
        res = self.reduce(v)
        if not res:
            return False
        pivot = min(res)
        inv = Fraction(1) / res[pivot]
        row = {k: inv * x for k, x in res.items()}
        for other in self.rows:
            c = other.get(pivot)
            if c:
                for k, x in row.items():
                    s = other.get(k, Fraction(0)) - c * x
                    if s:
                        other[k] = s
                    else:
                        other.pop(k, None)
        at = 0
        while at < len(self.pivots) and self.pivots[at] < pivot:
            at += 1
        self.pivots.insert(at, pivot)
        self.rows.insert(at, row)
        return True

    def basis(self) -> list[Vector]:
        return [dict(r) for r in self.rows]


def span_insert(space: Subspace, v: Vector) -> tuple[Subspace, bool]:
    """Functional insert: returns a new subspace and whether v was independent."""
    out = space.copy()
    was_new = out.insert(v)
    return out, was_new


def span_of(vectors: Iterable[Vector]) -> Subspace:
    s = Subspace()
    for v in vectors:
        s.insert(v)
    return s


def kernel(op: Mapping[Key, Vector] | Callable[[Key], Vector], domain: Iterable[Key]) -> Subspace:
    """Exact kernel of a linear map given by its action on domain keys.

    The map sends each domain key to a vector over arbitrary codomain keys;
    rank + nullity = len(domain) by construction.
    """
    apply = op.__getitem__ if isinstance(op, Mapping) else op
    image = Subspace()
    combos: list[Vector] = []  # combos[i] expresses image.rows[i] in domain keys
    ker = Subspace()
    for key in sorted(domain):
        img = dict(apply(key))
        combo = {key: Fraction(1)}
        for pivot, row, crow in zip(image.pivots, image.rows, combos):
            c = img.get(pivot)
            if c:
                img = vec_combine(img, row, -c)
                combo = vec_combine(combo, crow, -c)
        if img:
            pivot = min(img)
            inv = Fraction(1) / img[pivot]
            image.pivots.append(pivot)
            image.rows.append(vec_scale(inv, img))
            combos.append(vec_scale(inv, combo))
            # keep pivot list searchable in order of insertion; reduction above
            # walks every row, so sortedness is not required here
        else:
            ker.insert(combo)
    return ker


def rank(op, domain: Iterable[Key]) -> int:
    domain = list(domain)
    return len(domain) - kernel(op, domain).dim
